#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "picard/group.hpp"
#include "picard/json_io.hpp"

namespace picard {

// Face of a cell: sign * (word . face).
struct BoundaryRecord {
    std::string face;
    int sign = 1;
    Word word;
};

struct CellDatum {
    std::string name;
    int dim = 0;
    std::size_t order = 1;  // stated stabilizer order
    std::vector<Word> stabilizer;
    std::vector<BoundaryRecord> boundary;  // empty in degree 0
};

// Cells in the order of the cochain summands: m..r, a..i, A..G, X, Y.
class CellDataset {
public:
    static constexpr const char* kSchema = "picard-spine-cells";
    static constexpr int kVersion = 1;

    // Structural validation; throws std::invalid_argument.
    static CellDataset from_json(const json& j);
    json to_json() const;

    const std::vector<CellDatum>& cells(int dim) const { return by_dim_.at(dim); }
    const CellDatum& cell(const std::string& name) const;
    // Position among the cells of the same dimension.
    std::size_t index(const std::string& name) const;
    std::string description;

private:
    std::array<std::vector<CellDatum>, 4> by_dim_;
    std::map<std::string, std::pair<int, std::size_t>> where_;
};

const CellDataset& shipped_cells();
const char* shipped_cells_text();

// One term sign * rho(word) from source summand col into target summand row.
struct DifferentialTerm {
    std::size_t row;
    std::size_t col;
    int sign;
    Word word;
    friend bool operator==(const DifferentialTerm&, const DifferentialTerm&) = default;
};

// d_p read off the boundary records of the (p+1)-cells.
std::vector<DifferentialTerm> differential_terms(const CellDataset& cells, int p);
// d_p as printed in the explicit differentials, transcribed independently.
std::vector<DifferentialTerm> display_terms(int p);
// Same multiset of terms, with words compared as matrices.
bool same_terms(const std::vector<DifferentialTerm>& a, const std::vector<DifferentialTerm>& b);

}  // namespace picard

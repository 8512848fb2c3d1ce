#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picard/cells.hpp"
#include "picard/linalg.hpp"
#include "picard/representation.hpp"

namespace picard {

enum class RankMethod { Exact, Modular };
std::string method_name(RankMethod m);  // "exact" or "modular"

struct AssembledComplex {
    Mode mode = Mode::GaussianField;
    std::size_t ambient_dim = 0;
    std::array<std::vector<SubspaceBasis>, 4> bases;  // one per cell, summand order
    std::array<std::size_t, 4> dims{};
    // D_p : C^p -> C^{p+1} in the bases above.
    std::array<QiMatrix, 3> differentials;
};

// Throws std::runtime_error("saturation violated") when an image has
// non-integral coordinates (IntegerLattice), or when it leaves the target's
// fixed submodule.
AssembledComplex assemble(const Representation& rep, const CellDataset& cells = shipped_cells());

// d_p on ambient vectors: x has one dim-row block per p-cell; the result one
// block per (p+1)-cell.
GiMatrix apply_ambient(const Representation& rep, const CellDataset& cells, int p, const GiMatrix& x);
ModMatrix apply_ambient_mod(const Representation& rep, const CellDataset& cells, int p, const ModMatrix& x,
                            const ModPrime& pr);

struct CohomologyOptions {
    // GaussianField representations above this dimension use modular ranks.
    std::size_t exact_dim_limit = 15;
    std::size_t primes = 2;
    bool force_modular = false;
};

struct DegreeGroup {
    std::size_t rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
    // "0", "Z", "Z^2", "Z/2", "Z^2 + Z/2" (IntegerLattice); the dimension otherwise.
    std::string str(Mode mode) const;
};

struct CohomologyResult {
    std::string rep;
    Mode mode = Mode::GaussianField;
    RankMethod method = RankMethod::Exact;
    std::vector<std::uint32_t> primes;  // modular runs
    std::array<std::size_t, 4> cochain_dims{};
    std::array<std::size_t, 3> ranks{};
    std::array<DegreeGroup, 4> h;
    bool dd_zero = false;  // D D = 0 verified on this run (exact runs only)

    std::array<std::size_t, 4> dims() const;
    long euler_cochains() const;
    long euler_cohomology() const;
};

CohomologyResult cohomology(const Representation& rep, const CohomologyOptions& opts = {},
                            const CellDataset& cells = shipped_cells());
// Sym^n for n in [first, last], jobs worker threads, results in order of n.
std::vector<CohomologyResult> symn_table(int first, int last, const CohomologyOptions& opts = {},
                                         std::size_t jobs = 1);

struct H0Check {
    bool equal = false;
    std::size_t kernel_dim = 0;  // ker D0
    std::size_t fixed_dim = 0;   // E^<e, w, t, s>
    RankMethod method = RankMethod::Exact;
};
// ker D0 against the diagonal copy of E^<e, w, t, s> in C^0.
H0Check h0_identity_check(const Representation& rep, const CohomologyOptions& opts = {},
                          const CellDataset& cells = shipped_cells());

struct H3Bounds {
    std::size_t rank_bound = 0;                // dim E - dim E^{rho(ew)}
    std::optional<std::size_t> eigen_bound;    // dim(E+ of e  cap  E- of w); GaussianField only
    std::size_t actual = 0;
    bool holds = false;                        // actual <= eigen_bound <= rank_bound
};
H3Bounds h3_bounds(const Representation& rep, std::size_t actual_h3);

struct GroupRingCheck {
    bool ok = false;
    std::string detail;
};
// d_{p+1} d_p = 0 as an identity in Z[Gamma] after averaging over the source
// stabilizer, for p = 0, 1. Implies D D = 0 for every representation.
GroupRingCheck group_ring_dd_check(const CellDataset& cells = shipped_cells());
// D_{p+1} D_p = 0 on an assembled complex, exactly.
bool dd_zero(const AssembledComplex& c);
// d_{p+1} d_p = 0 over F_p on the fixed submodules of every p-cell, p = 0, 1.
bool dd_zero_mod(const Representation& rep, const ModPrime& pr, const CellDataset& cells = shipped_cells());
// Stabilizer orders against the stated orders; empty when all agree.
std::vector<std::string> stabilizer_mismatches(const CellDataset& cells = shipped_cells());

}  // namespace picard

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "picard/gaussian.hpp"
#include "picard/group.hpp"

namespace picard {

enum class ConfigTag { J21, J22, J31, J32, J33, J41, J42, J5, J8, NotBounded, Unrecognized };

std::string tag_name(ConfigTag t);  // "J2_1", ..., "J8", "NotBounded", "Unrecognized"
ConfigTag tag_from_name(const std::string& s);
// The nine representatives, ordered J2_1 .. J8.
const std::vector<ConfigTag>& admissible_tags();

// Reduced isotropic vectors, unit-normalized, pairwise distinct.
class Configuration {
public:
    Configuration() = default;
    // Validates and normalizes; throws std::invalid_argument on bad input.
    explicit Configuration(const std::vector<GVec3>& vectors);

    std::size_t size() const { return v_.size(); }
    const GVec3& operator[](std::size_t k) const { return v_[k]; }
    const std::vector<GVec3>& vectors() const { return v_; }
    bool contains(const GVec3& v) const;  // up to units
    Configuration with(const GVec3& v) const;
    Configuration transformed(const GMat3& g) const;
    // Same unit classes, any order.
    bool same_set(const Configuration& o) const;

private:
    std::vector<GVec3> v_;
};

const Configuration& representative(ConfigTag t);

// Entry (i,j) = |Q(v_i, v_j)|^2.
using QMatrix = std::vector<std::vector<long>>;
QMatrix q_matrix(const Configuration& c);
// Equal after a simultaneous permutation of rows and columns.
bool q_matrix_equivalent(const QMatrix& a, const QMatrix& b);
bool is_c_bounded(const Configuration& c, long bound);
int span_dimension(const Configuration& c);

struct VectorReduction {
    Word word;  // in <s, sc, e, t>
    GVec3 v;    // unit_normalize(eval_word(word) * input)
};

// Moves p/q into the triangle 0, 1, i and Re(n/q) into (-1/2, 1/2].
// Throws std::invalid_argument when q = 0.
VectorReduction reduce_vector_pair(const GVec3& v);

// Word g with g v a unit multiple of (1,0,0).
Word word_to_origin(const GVec3& v);
// Word in e, w, s, sc, t evaluating to g. Throws unless g is a member.
Word word_for_element(const GMat3& g);

// All v outside c with c + {v} bound-bounded. c must contain (1,0,0) and one
// vector with q != 0.
std::vector<GVec3> enumerate_extensions(const Configuration& c, long bound);

// All supersets of base of the given size whose pairwise |Q|^2 <= bound,
// optionally pruned by the per-row value profile of a target configuration.
std::vector<Configuration> bounded_supersets(const Configuration& base, long bound, std::size_t size,
                                             const Configuration* profile = nullptr);

// All g in the group with g.from = to as sets of unit classes.
std::vector<GMat3> set_maps(const Configuration& from, const Configuration& to, bool first_only = false);
std::optional<GMat3> conjugator(const Configuration& from, const Configuration& to);
FiniteGroup stabilizer(const Configuration& c);

struct Classification {
    ConfigTag tag = ConfigTag::Unrecognized;
    std::optional<GMat3> conjugator;  // g c = representative(tag)
};

// Throws std::invalid_argument on fewer than two vectors.
Classification classify(const Configuration& c);

struct Incidence {
    long below = 0;  // supersets of the col representative of row type
    long above = 0;  // subsets of the col representative of row type
};

Incidence incidence_counts(ConfigTag row, ConfigTag col);

// Reduced forms of every v with q != 0 and |Q((1,0,0), v)|^2 <= bound.
std::vector<GVec3> pair_normal_forms(long bound);

struct ClosureStep {
    ConfigTag from;
    std::size_t extensions = 0;
    std::map<ConfigTag, std::size_t> reached;  // classify(from + {v}) counts
};
struct BoundedClosure {
    std::vector<ClosureStep> steps;  // in discovery order
    std::set<ConfigTag> classes;
    bool closed = false;  // no Unrecognized or NotBounded extension
};
// Classes reachable from the order-2 normal forms by adding one
// bound-bounded vector at a time.
BoundedClosure bounded_closure(long bound = 2);

}  // namespace picard

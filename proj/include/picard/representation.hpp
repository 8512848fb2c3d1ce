#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "picard/group.hpp"
#include "picard/linalg.hpp"

namespace picard {

enum class Mode { IntegerLattice, GaussianField };
std::string mode_name(Mode m);  // "Z" or "Qi"

// A Gamma-module given by a functor on matrices. IntegerLattice images have
// real entries; GaussianField images are Gaussian integral.
class Representation {
public:
    using Functor = std::function<GiMatrix(const GMat3&)>;
    using ModFunctor = std::function<ModMatrix(const GMat3&, const ModPrime&)>;

    Representation(std::string name, Mode mode, std::size_t dim, Functor f, ModFunctor fm = {});

    const std::string& name() const { return name_; }
    Mode mode() const { return mode_; }
    std::size_t dim() const { return dim_; }

    GiMatrix image(const GMat3& g) const;
    GiMatrix image(const Word& w) const { return image(eval_word(w)); }
    ModMatrix image_mod(const GMat3& g, const ModPrime& pr) const;
    // Generator symbol -> matrix, for e, w, s, sc, t, x.
    std::map<std::string, GiMatrix> action() const;

    // Invertibility of each generator image and the relations e^4, w^2 e^-2,
    // x^2 s t^-1 e^-1. Throws std::logic_error naming the first failure.
    void validate() const;

private:
    std::string name_;
    Mode mode_;
    std::size_t dim_;
    Functor f_;
    ModFunctor fm_;
};

Representation trivial_rep(Mode mode = Mode::GaussianField);
// GaussianField: dim 3, rho(g) = g. IntegerLattice: the realification, dim 6.
Representation standard_rep(Mode mode);
// g -> (g^t)^-1 on Z[i]^3.
Representation dual_rep();
// Monomials of degree n in graded-lex order, g acting by substitution.
Representation symn_rep(int n);

struct Monomial {
    int a, b, c;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};
std::vector<Monomial> symn_basis(int n);
std::size_t monomial_index(const Monomial& m);

Representation direct_sum(const std::vector<Representation>& parts);
// p rho p^-1 with p unimodular over Z[i]; p_inv is checked.
Representation conjugated(const Representation& rep, const GiMatrix& p, const GiMatrix& p_inv);
// Direct sum of one to three blocks from {trivial, standard, dual, Sym^2},
// conjugated by a random unimodular matrix. GaussianField mode.
Representation random_small_rep(std::mt19937_64& rng);

struct SubspaceBasis {
    Mode mode = Mode::GaussianField;
    GiMatrix columns;  // dim x k, full column rank
    std::size_t size() const { return columns.cols(); }
};

// Common fixed vectors of the generators. With require_finite, throws
// std::runtime_error when they do not generate a finite group.
SubspaceBasis fixed_subspace(const Representation& rep, const std::vector<Word>& gens, bool require_finite = true);
SubspaceBasis fixed_subspace(const Representation& rep, const std::vector<GMat3>& gens, bool require_finite = true);
// Same kernel over F_p, without the finiteness check.
ModMatrix fixed_subspace_mod(const Representation& rep, const std::vector<GMat3>& gens, const ModPrime& pr);
// rank of sum_h rho(h) over the closed group.
std::size_t averaging_rank(const Representation& rep, const std::vector<GMat3>& gens);

// ker(rho(g) - lambda I), lambda = +1 or -1.
SubspaceBasis eigenspace(const Representation& rep, const Word& g, int lambda);
// ker of the stacked rho(g_k) - lambda_k I.
SubspaceBasis joint_eigenspace(const Representation& rep, const std::vector<std::pair<Word, int>>& conds);

}  // namespace picard

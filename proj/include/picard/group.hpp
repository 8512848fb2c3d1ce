#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "picard/gaussian.hpp"

namespace picard {

enum class Gen { Eps, W, Sigma, SigmaCheck, Tau, Xi };

const char* gen_symbol(Gen g);  // e, w, s, sc, t, x
GMat3 generator_matrix(Gen g);

struct Letter {
    Gen gen;
    int exp;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Product of generator powers, read left to right as a matrix product.
class Word {
public:
    Word() = default;
    Word(std::vector<Letter> letters);
    Word(Gen g, int exp = 1);

    // "t w t s w e^3"; empty string, "1" and "e^0" give the identity.
    static Word parse(const std::string& text);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::string str() const;
    Word inverse() const;

    Word& operator*=(const Word& o);
    friend Word operator*(Word a, const Word& b) { return a *= b; }
    friend bool operator==(const Word&, const Word&) = default;

private:
    void push(Letter l);
    std::vector<Letter> letters_;
};

GMat3 eval_word(const Word& w);
// Exact inverse; throws unless det is a unit.
GMat3 inverse(const GMat3& m);
GMat3 power(const GMat3& m, long k);
// m* J m = J and det m = 1.
bool is_member(const GMat3& m);

// A matrix certified to lie in the group.
class GroupElement {
public:
    explicit GroupElement(GMat3 m);  // throws std::invalid_argument if not a member
    static GroupElement from_word(const Word& w) { return GroupElement(eval_word(w)); }
    const GMat3& matrix() const { return m_; }
    GroupElement operator*(const GroupElement& o) const { return GroupElement(m_ * o.m_, 0); }
    GroupElement inverse() const { return GroupElement(m_.adjugate(), 0); }
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.m_ < b.m_; }

private:
    GroupElement(GMat3 m, int) : m_(std::move(m)) {}
    GMat3 m_;
};

class FiniteGroup {
public:
    FiniteGroup(std::vector<GMat3> elements, std::vector<GMat3> generators);

    std::size_t order() const { return elements_.size(); }
    const std::vector<GMat3>& elements() const { return elements_; }
    const std::vector<GMat3>& generators() const { return generators_; }
    bool contains(const GMat3& m) const { return index_.count(m) != 0; }
    std::size_t index_of(const GMat3& m) const;
    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.elements_ == b.elements_;
    }

private:
    std::vector<GMat3> elements_;  // sorted
    std::vector<GMat3> generators_;
    std::map<GMat3, std::size_t> index_;
};

// Throws std::runtime_error("not finite within cap") when the closure outgrows cap.
FiniteGroup close_subgroup(const std::vector<GMat3>& gens, std::size_t cap = 10000);
FiniteGroup close_subgroup(const std::vector<Word>& gens, std::size_t cap = 10000);

struct GroupInvariants {
    std::size_t order = 1;
    std::size_t exponent = 1;
    bool abelian = true;
    std::vector<std::size_t> center;               // invariant factors, each divides the next
    std::vector<std::size_t> abelian_invariants;   // of the whole group, empty unless abelian
    std::size_t max_elem_abelian_classes = 0;      // conjugacy classes of maximal (Z/2)^r
};

std::size_t element_order(const GMat3& m, std::size_t cap = 10000);
// Invariant factors of an abelian group given by its elements.
std::vector<std::size_t> abelian_invariant_factors(const std::vector<GMat3>& elements);
GroupInvariants group_invariants(const FiniteGroup& g);

}  // namespace picard

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "picard/config.hpp"
#include "picard/gaussian.hpp"
#include "picard/group.hpp"

namespace picard {

using cplx = std::complex<double>;

// z = (y, beta, r), y > 0.
struct Point {
    double y = 1;
    cplx beta{0, 0};
    double r = 0;
};

constexpr double kTieTolerance = 1e-9;

// y / sqrt(|n - beta p + (i|beta|^2/2 - r) q|^2 + y^2 |p - i conj(beta) q|^2 + y^4 |q|^2)
double f_exhaustion(const GVec3& v, const Point& z);

// Closed forms for s, sc, t, e; the other generators go through act().
Point generator_action(Gen g, const Point& z, long k = 1);
// g.z for any element, from the UDU* factorisation of (g g_z)(g g_z)*.
Point act(const GMat3& g, const Point& z);

struct PointReduction {
    Word word;
    Point z;
};
// -1/2 < r <= 1/2 and beta in the square 0, (1+i)/2, i, (-1+i)/2.
PointReduction reduce_point(const Point& z);
bool in_reduced_square(cplx beta, double tol = 1e-12);

// Height squared of E({(1,0,0), v}) over (beta, r), if it exists there.
std::optional<double> e_surface_y2(const GVec3& v, cplx beta, double r);

struct FirstContact {
    std::optional<Point> point;  // only when one side is (1,0,0)
    double value = 0;
};
FirstContact first_contact_pair(const GVec3& a, const GVec3& b);

struct Witness {
    GVec3 v;
    double value;
    bool tie;  // within kTieTolerance of the floor
};

struct SearchBounds {
    double q_norm2_max;  // |q|^2 <= 1/(y^2 floor^2)
    double p_radius;     // |p - i conj(beta) q| <= 1/floor
    double n_radius;     // |n - beta p + (i|beta|^2/2 - r) q| <= y/floor
    long candidates;
};

struct ParabolicSearch {
    std::vector<Witness> witnesses;  // descending value
    SearchBounds bounds;
};

// Every reduced isotropic v with f_v(z) >= floor - kTieTolerance.
ParabolicSearch max_parabolic(const Point& z, double floor);

struct SpineValue {
    double value = 0;                 // max over all parabolics
    std::vector<Witness> dominating;  // within kTieTolerance of value
    long candidates = 0;
};
SpineValue spine_value(const Point& z);

// First-contact point z(I) of each representative.
Point first_contact_point(ConfigTag t);

struct Refinement {
    Point z;
    double residual;
    int iterations;
};
// Newton on the equal-value equations (plus Lagrange conditions when they
// do not pin the point), started at first_contact_point(t).
Refinement refine_first_contact(ConfigTag t);

struct AdmissibilityCheck {
    ConfigTag tag;
    bool pass = false;
    double value = 0;       // f_I(z(I))
    double spread = 0;      // max - min of f over members
    double runner_up = 0;   // best non-member value
    std::vector<Witness> witnesses;
    std::string detail;
};
AdmissibilityCheck verify_strong_admissibility(ConfigTag t, double margin = 1e-6);

struct SpineSample {
    Point z;
    double value;  // max over all parabolics
    ConfigTag cell;
};
struct SpineSampling {
    std::vector<SpineSample> samples;
    long attempts = 0;
};
// Points of D(J2_1) or D(J2_2) drawn on the E-surface and kept when the two
// members dominate every other parabolic.
SpineSampling sample_spine_cell(ConfigTag cell, std::size_t count, std::uint64_t seed);

}  // namespace picard

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chowfano/rng.hpp"
#include "chowfano/symp.hpp"

namespace chowfano {
namespace symp {

// Instance generation inverts the membership problem: draw the subvariety
// with small integer coordinates first, then solve the linear system for
// hypersurface coefficients through it. Genericity failures inside operations
// throw NonGenericError; the suites redraw on a fresh substream and log it.

QVec random_vector(RngStream& rng, int dim, int bound = 3);
Subspace random_subspace(RngStream& rng, int ambient, int dim, int bound = 3);
// a hyperplane containing the given subspace
Subspace random_hyperplane_through(RngStream& rng, const Subspace& s);
// a cubic vanishing on the subspace, free tensor entries drawn from [-9, 9]
CubicForm random_cubic_through(RngStream& rng, int ambient, const Subspace& s);
CubicForm random_cubic(RngStream& rng, int ambient);
QuadricForm random_quadric(RngStream& rng, int ambient);
// a quadric whose restriction to the plane is the given conic (up to the
// supplied multiplier)
QuadricForm random_quadric_matching_conic(RngStream& rng, const Subspace& plane,
                                          const QuadricForm& conic, const Rat& alpha);
// a cubic whose restriction to the plane is (linear form) * conic
CubicForm random_cubic_through_conic(RngStream& rng, const Subspace& plane,
                                     const QuadricForm& conic, const QVec& lambda_on_plane);

// an invertible matrix with small integer entries and its use as a coordinate
// change for forms
QMat random_unimodular(RngStream& rng, int dim);

struct InstanceResult {
    std::uint64_t instance = 0;
    int redraws = 0;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> data;  // ordered key/value
};

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<InstanceResult> instances;
    bool identity_checked = false;  // suite-level symbolic checks
    bool pass = false;
    std::vector<std::string> notes;
};

SuiteResult theorem1_suite(std::uint64_t seed, std::uint64_t trials);
SuiteResult prop2_suite(std::uint64_t seed, std::uint64_t trials);
SuiteResult prop4_suite(std::uint64_t seed, std::uint64_t trials);
SuiteResult lemma5_suite(std::uint64_t seed, std::uint64_t trials);
SuiteResult nodal_suite(std::uint64_t seed, std::uint64_t trials);
SuiteResult conic_smooth_suite(std::uint64_t seed, std::uint64_t trials);
SuiteResult theta_suite(std::uint64_t seed, std::uint64_t trials);

SuiteResult run_suite(const std::string& check, std::uint64_t seed, std::uint64_t trials);

std::string suite_to_json(const SuiteResult& s);
std::string suite_summary(const SuiteResult& s);

// the determinant identity behind the rank-4 statement, verified as a
// polynomial identity in the eight tangent parameters
bool normalized_model_determinant_identity();
// the minimal cubic of the normalized model: 3 x1^2 x4 + 6 x1 x2 x5 + 3 x2^2 x6
CubicForm normalized_model_cubic();

}  // namespace symp
}  // namespace chowfano

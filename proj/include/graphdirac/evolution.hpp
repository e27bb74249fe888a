#pragma once

#include "graphdirac/graph.hpp"
#include "graphdirac/linops.hpp"
#include "graphdirac/matrix.hpp"

#include <vector>

namespace graphdirac {

enum class StateKind { vertex, edge, vertex_edge };

/// Complex-valued state bound to a graph's vertices, edges, or both.
struct StateVector {
    StateKind kind = StateKind::vertex;
    std::vector<Complex> values;
};

/// Expected state length for a kind on a given graph.
int state_dimension(const OrientedGraph& g, StateKind kind);

struct EvolutionParams {
    double hbar = 1.0;
    std::vector<double> grid; // strictly increasing

    void validate() const; // throws Error on bad hbar or non-increasing grid
};

/// psi(t) = exp((i/hbar) * op * t) * psi0 via the spectral decomposition of
/// the symmetric operator. Unitary: the norm of psi is preserved.
StateVector evolve(const Matrix& op, const StateVector& psi0, double t, double hbar = 1.0);

/// Same evolution applied from a precomputed decomposition (one spectrum,
/// many time points).
StateVector evolve_with_spectrum(const Spectrum& spec, const StateVector& psi0, double t,
                                 double hbar = 1.0);

/// Kernel-membership residual test: fixed by the evolution for every t
/// exactly when op * psi0 = 0.
bool is_steady(const Matrix& op, const StateVector& psi0, double tol = 1e-9);

/// Arithmetic mean of the components; throws on an empty state.
Complex average(const StateVector& psi);

struct TimeSeriesRow {
    double t = 0.0;
    double avg_re = 0.0;
    double avg_im = 0.0;
    double avg_angle = 0.0; // atan2(avg_im, avg_re), range (-pi, pi]
    double norm = 0.0;
};

std::vector<TimeSeriesRow> time_series(const Matrix& op, const StateVector& psi0,
                                       const EvolutionParams& params);

enum class FormKind { even, odd, incidence };

/// Graph-theoretic quadratic form:
///   even:      sum over edges of (psi_head - psi_tail)^2,
///   odd:       sum over vertices of (signed sum of incident edge values)^2,
///   incidence: 2 * sum over edges of psi_e * (psi_head - psi_tail).
/// Cross-checked against psi^t M psi for the matching operator.
Complex quadratic_form(FormKind kind, const OrientedGraph& g, const StateVector& psi);

struct RootCheckReport {
    int kernel_vertex_samples = 0; // (kernel vertex state) + (random edge state)
    int kernel_edge_samples = 0;   // (random vertex state) + (kernel edge state)
    double max_abs_value = 0.0;    // largest |q| seen over all samples
};

/// Samples both families of known roots of the incidence-operator form and
/// checks each evaluates to zero (within 1e-9 on unit-norm states).
RootCheckReport root_superset_check(const OrientedGraph& g, int samples, unsigned seed = 12345);

} // namespace graphdirac

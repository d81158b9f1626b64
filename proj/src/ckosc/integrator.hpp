#pragma once

#include <vector>

#include "ckosc/dynamics.hpp"

namespace ckosc {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.0;   // 0 = no cap
    long max_steps = 2000000;
    double sample_dt = 0.0;  // 0 = sample every accepted step
    // Polar-chart floor; reaching it (Lorentzian isotropes, J ~ 0 infall)
    // ends the run with a ChartBoundary event rather than an error. The
    // conserved quantities are ill-conditioned in that layer (their state
    // sensitivity grows like J^2/r^3), so going deeper needs a tighter
    // rel_tol to hold the drift target.
    double r_floor = 0.1;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw_error(ErrorKind::InvalidArgument, "tolerances must be positive");
        if (max_steps <= 0)
            throw_error(ErrorKind::InvalidArgument, "max_steps must be positive");
        if (max_step < 0.0 || sample_dt < 0.0)
            throw_error(ErrorKind::InvalidArgument, "step caps must be nonnegative");
    }
};

struct TrajectorySample {
    double t;
    PhaseState state;
    NoetherMomenta momenta;
    double energy;
    FradkinTensor fradkin;
};

enum class EventKind { RadialMin, RadialMax, AxisCrossing, ChartBoundary };

struct TrajectoryEvent {
    double t;
    EventKind kind;
    PhaseState state;
};

// Worst relative drift of each conserved quantity over the run,
// |Q(t) - Q(0)| / max(1, |Q(0)|).
struct DriftReport {
    double energy;
    double j;
    double f11;
    double f12;
    double f22;

    double worst() const;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    std::vector<TrajectoryEvent> events;
    bool hit_boundary = false; // ended at a ChartBoundary event before t_end

    DriftReport drift_report() const;
    const TrajectorySample& front() const { return samples.front(); }
    const TrajectorySample& back() const { return samples.back(); }
};

// Propagate the oscillator flow with an embedded Dormand-Prince 5(4) pair,
// PI step control and quartic dense output. Radial turning points and axis
// crossings are located by bisection on the dense output; chart-boundary
// approach ends the run early with an event (not an error). Chart choice:
// polar states with J = 0 or r below r_floor are moved to the parallel
// chart, where the origin is regular; everything else integrates in the
// chart it arrived in.
Trajectory simulate(const CKParams& p, const Oscillator& osc, const PhaseState& init,
                    double t_end, const IntegratorConfig& cfg = {});

// Time between successive radial minima, from the bisection-refined event
// times; needs at least 3 RadialMin events (NotPeriodic otherwise). The full
// orbital period is twice this value.
double radial_period_measured(const Trajectory& traj);

// Full period: 2x the radial period when radial events exist; for circular
// orbits (no radial events) falls back to the angular winding rate.
double full_period_measured(const CKParams& p, const Trajectory& traj);

} // namespace ckosc

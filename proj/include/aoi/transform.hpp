#pragma once

// Exact correspondence between Min-Age and Min-WCS.
//
// Weights are the doubled age reductions, so for any feasible age schedule s
// and its shifted job schedule (slot = time - t0):
//
//     2 * evaluate_age(inst, s) == evaluate_wcs(to_wcs(inst), shifted).total
//
// The factor two is never divided out inside the library.

#include "aoi/model.hpp"

namespace aoi {

// Internal job j of pair i: 2 * (births[j] - births[j-1]) with births[-1] = b0.
// Leaf job: 2 * t0 - 1 - 2 * (second to last birthday).
// Requires an instance without special receivers.
WcsInstance to_wcs(const MinAgeInstance& inst);

// Handles special receivers: their chain gets indicator 0, the leaf weight
// becomes the doubled last age reduction, and the schedule-independent area
// is folded into the constant.
WcsInstance to_wcs_special(const MinAgeInstance& inst);

JobSchedule age_to_job(const AgeSchedule& s, Int t0);
AgeSchedule job_to_age(const JobSchedule& s, Int t0);

// Every internal weight even and positive, every leaf weight odd, all
// indicators 1, constant 0. Empty when the instance is constrained.
Violations constrained_violations(const WcsInstance& inst);

// Reverse of to_wcs on constrained instances: to_wcs(from_constrained(I)) == I.
MinAgeInstance from_constrained(const WcsInstance& inst);

}  // namespace aoi

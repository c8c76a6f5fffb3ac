#pragma once

#include "tracking/cvd_adapter.hpp"
#include "tracking/dcm_solver.hpp"
#include "tracking/vc_adapter.hpp"

namespace tracking {

/// Dispatch on the instance's modulator kind.
inline Solution solve_instance(const Instance& inst, const SolveOptions& opts = {}) {
  switch (inst.kind) {
    case ModulatorKind::Vc: return solve_vc(inst, opts);
    case ModulatorKind::Cvd: return solve_cvd(inst, opts);
    case ModulatorKind::Dcm: return solve_dcm(inst, opts);
  }
  throw std::logic_error("unknown modulator kind");
}

}  // namespace tracking

// thermo.hpp — Work and heat bookkeeping, energy ledgers and closed-form limiting cycles

#pragma once

#include <array>
#include <initializer_list>
#include <string>

#include "stirling/cycle.hpp"
#include "stirling/generator.hpp"
#include "stirling/qops.hpp"

namespace stirling {

// H + sum over baths of [delta_R H + delta_CR (Delta sz - q sx)].
PauliOperator effective_hamiltonian(const PauliOperator& H, double q, double delta,
                                    std::initializer_list<RateSet> rates);

// \int tr[dH/dt rho] over the stroke (Simpson on the half-step samples). The
// effective variant differentiates H_eff numerically and adds the jump
// tr[(H_eff(t_start+) - H_eff(t_start-)) rho] at a bath switch.
double average_work(const StrokeRecord& rec, HamiltonianVariant variant);

// \int tr[H L(rho)] over the stroke, with H_eff for the effective variant.
// tr[H_eff L(rho)] equals tr[H_eff D(rho)] since the Lamb-shifted commutator
// drops out; using the full L for the bare variant keeps the first law exact.
double average_heat(const StrokeRecord& rec, HamiltonianVariant variant);

struct LedgerColumns {
    std::array<double, 4> heat_in{};  // ab bc cd da
    std::array<double, 4> work_on{};
    double W_extract{};
    double Q_h{};
    double power{};        // W_extract / (tau_ab + tau_cd)
    double power_period{}; // W_extract / T
    double efficiency{};   // NaN when Q_h <= 0
    double first_law_residual{};
};

struct EnergyLedger {
    double tau_ab{};
    double tau_cd{};
    LedgerColumns bare;
    LedgerColumns effective;
    double first_law_residual{}; // worst of the two variants
    bool not_an_engine{};

    const LedgerColumns& columns(HamiltonianVariant v) const {
        return v == HamiltonianVariant::Bare ? bare : effective;
    }
};

// Fills derived quantities from per-stroke heat and work.
LedgerColumns close_ledger(const std::array<double, 4>& heat_in, const std::array<double, 4>& work_on,
                           double tau_ab, double tau_cd, double period);

EnergyLedger ledger(const CycleRun& run);

double carnot_efficiency(const CycleConfig& cfg);

enum class LimitCase { SS, FS, SF, FF };

std::string to_string(LimitCase c);

// first letter: compression a->b, second: expansion c->d; s = quasi-static, f = sudden.
struct LimitingCycleReport {
    LimitCase which{LimitCase::SS};
    LedgerColumns columns;
};

std::array<LimitingCycleReport, 4> limiting_cycles(const CycleConfig& cfg);

} // namespace stirling

#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "shiftlab/betti.hpp"
#include "shiftlab/ideal.hpp"
#include "shiftlab/invariants.hpp"
#include "shiftlab/linear_quotients.hpp"
#include "shiftlab/shift_algebra.hpp"

namespace shiftlab {

/// Parses the ideal grammar:
///   ideal   := "(" [gen ("," gen)*] ")"
///            | "B(" gen ("," gen)* ")"            Borel closure
///            | "Bc(" gen ";" int ("," int)* ")"   c-bounded Borel closure
///            | "E(" graph ")" | "C(" graph ")"    edge / cover ideal
///   gen     := factor ("*" factor)*
///   factor  := "1" | var ("^" int)?
///   var     := "x" int | "x" | "y" | "z" | "w"
///   graph   := int [";" [edge ("," edge)*]],  edge := int "-" int
/// The ambient variable count is the largest index seen unless `vars`
/// demands more; for Bc the bound vector fixes it exactly.
MonomialIdeal parse_ideal(const std::string& text, std::size_t vars = 0);

/// Prints with x,y,z aliases for at most three variables, x<i> otherwise;
/// parse(to_string(I)) reproduces I (ambient included for full-support
/// ideals; pass vars otherwise).
std::string to_string(const Monomial& m, std::size_t vars_for_alias);
std::string to_string(const MonomialIdeal& ideal);
std::string to_string(const MonomialPrime& p, std::size_t vars_for_alias);

nlohmann::json to_json(const BettiTable& table);
std::string betti_pretty(const BettiTable& table);

nlohmann::json to_json(const VNumberReport& report, std::size_t vars);
nlohmann::json ass_to_json(const std::vector<MonomialPrime>& primes, std::size_t vars);
nlohmann::json to_json(const AdmissibleOrder& order, std::size_t vars);
nlohmann::json to_json(const GeneratorGraph& graph, std::size_t vars);

nlohmann::json to_json(const PowerSweep& sweep, const StabilizationReport& report);
std::string sweep_to_csv(const PowerSweep& sweep, const StabilizationReport& report);
std::string sweep_pretty(const PowerSweep& sweep, const StabilizationReport& report);

nlohmann::json to_json(const HlpMatrix& matrix, std::size_t vars);
std::string hlp_pretty(const HlpMatrix& matrix, std::size_t vars);

} // namespace shiftlab

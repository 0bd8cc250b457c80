#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bercong/checker.hpp"
#include "bercong/verifier.hpp"
#include "bercong/zeta.hpp"

namespace bercong::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs the tool with args[0] as the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string render_check_text(const std::string& name, const CongruenceFamily& family, const ConditionReport& report);
std::string render_check_json(const std::string& name, const CongruenceFamily& family, const ConditionReport& report);
std::string render_verify_text(const std::string& name, const VerificationReport& report);
std::string render_verify_json(const std::string& name, const VerificationReport& report);
std::string render_zeta_text(const ZetaCoeffEstimate& est, const std::vector<BoundCheck>* checks);

}  // namespace bercong::cli

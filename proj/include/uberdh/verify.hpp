#pragma once

#include <string>
#include <vector>

#include "uberdh/complex.hpp"
#include "uberdh/scalar.hpp"

namespace uberdh {

enum class ClaimStatus { Pass, Fail, Skipped };

std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string statement;
  bool hypotheses = true;
  ClaimStatus status = ClaimStatus::Skipped;
  std::vector<std::string> details;  // mismatches, or why a claim was skipped
  std::vector<std::string> notes;    // informational only
};

struct VerificationReport {
  Coefficients coefficients = Coefficients::rationals();
  std::vector<ClaimResult> claims;

  std::size_t failures() const;
  const ClaimResult* find(const std::string& id) const;
};

struct VerifyOptions {
  int max_vertices = 20;
  bool all = false;  // also compare against full uberhomology
};

/// Checks every comparison statement on K. Hypotheses are evaluated per
/// claim; failures land in the report rather than being thrown.
VerificationReport verify_all(const SimplicialComplex& k, Coefficients coeffs, VerifyOptions options = {});

}  // namespace uberdh

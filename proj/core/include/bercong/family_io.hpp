#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "bercong/checker.hpp"

namespace bercong {

/// Serialized congruence family:
///
///   {
///     "name": "kummer",                 (optional)
///     "description": "...",             (optional)
///     "N": 2,
///     "g0": "0",
///     "terms": [ {"f": "t+1", "g": "1/(t+1)"}, ... ]
///   }
struct FamilyFile {
  struct Term {
    std::string f;
    std::string g;
  };
  std::string name;
  std::string description;
  std::int64_t N = 0;
  std::string g0;
  std::vector<Term> terms;
};

class FamilyFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws FamilyFormatError for malformed JSON or missing/mistyped fields.
FamilyFile parse_family_json(const std::string& text);
FamilyFile load_family_file(const std::filesystem::path& path);

std::string to_json(const FamilyFile& file);

/// Parses every expression and validates the index polynomials. Errors name
/// the offending field.
CongruenceFamily to_family(const FamilyFile& file);

}  // namespace bercong

#pragma once

#include "gcs/construct.hpp"
#include "gcs/errors.hpp"
#include "gcs/pmepr.hpp"

#include <string>
#include <vector>

namespace gcs {

// JSON document for a constructed set:
//   {p, q, L, m, k, digits, pi, c, c_prime, g, members: [{gamma, seq}]}
// with digits least-significant first and g in ANF text form. Two-space
// indentation, trailing newline; byte-stable for golden diffing.
std::string set_to_json(const GcsSet& set);

// A set read back from disk: enough to re-verify correlations and PMEPR.
struct LoadedSet {
  int q = 2;
  std::vector<ZqSequence> rows;
  std::vector<std::vector<int>> gammas;  // empty when the source had none
};

LoadedSet load_set_json(const std::string& text);

// Bare integer matrix, one comma-separated row per sequence; the alphabet
// size is not stored in the file and must be supplied.
LoadedSet load_set_csv(const std::string& text, int q);

std::string matrix_csv(const std::vector<ZqSequence>& rows);

// Rows `member_index,gamma,pmepr`: gamma digits joined with ';' (CSV-safe),
// empty when unknown; pmepr printed with 12 significant digits.
std::string pmepr_csv(const PmeprReport& report,
                      const std::vector<std::vector<int>>& gammas);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gcs

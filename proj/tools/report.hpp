#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pslab/ideal.hpp"
#include "pslab/qseries.hpp"

namespace pslab::cli {

/// One named check over a module (or over a whole level when index < 0),
/// carrying either bigraded presentation rows or lemma-style rows.
struct CheckBlock {
  std::string name;
  int level = 0;
  int index = -1;
  bool pass = false;
  std::vector<GradedPieceReport> piece_rows;
  std::vector<CheckRow> check_rows;
};

struct RunInfo {
  std::string command;
  nlohmann::ordered_json config;
  bool timing = false;
  long long elapsed_ms = 0;
};

nlohmann::ordered_json verification_report(const RunInfo& info,
                                           const std::vector<CheckBlock>& blocks);

std::string render_verification(const nlohmann::ordered_json& report, const std::string& format);

/// Series as the canonical JSON array-of-rows form [[charge, [c0, c1, ...]], ...].
nlohmann::ordered_json series_json(const BivariateSeries& s);

struct CharResult {
  int level = 0;
  int index = 0;
  int order = 0;
  BivariateSeries dims;
  BivariateSeries counts;
  BivariateSeries fermionic;
  bool counts_match = false;
  bool fermionic_match = false;

  CharResult() : dims(0), counts(0), fermionic(0) {}
};

nlohmann::ordered_json char_report(const RunInfo& info, const CharResult& result);
std::string render_char(const nlohmann::ordered_json& report, const CharResult& result,
                        const std::string& format);

}  // namespace pslab::cli

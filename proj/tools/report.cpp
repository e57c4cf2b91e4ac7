#include "report.hpp"

#include <iomanip>
#include <sstream>

#include "pslab/version.hpp"

namespace pslab::cli {

namespace {

using nlohmann::ordered_json;

ordered_json piece_row_json(const GradedPieceReport& r) {
  ordered_json row;
  row["weight"] = r.weight;
  row["charge"] = r.charge;
  row["dim_monomials"] = r.dim_monomials;
  row["dim_ideal"] = r.dim_ideal;
  row["dim_kernel"] = r.dim_kernel;
  row["ideal_in_kernel"] = r.ideal_in_kernel;
  row["kernel_in_ideal"] = r.kernel_in_ideal;
  row["equal"] = r.equal;
  if (!r.witness.empty()) row["witness"] = r.witness;
  return row;
}

ordered_json check_row_json(const CheckRow& r) {
  ordered_json row;
  row["check"] = r.check;
  if (r.index >= 0) row["i"] = r.index;
  row["weight"] = r.weight;
  row["charge"] = r.charge;
  row["pass"] = r.pass;
  if (!r.detail.empty()) row["detail"] = r.detail;
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

ordered_json coefficient_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) {
    return ordered_json(static_cast<long long>(r.get_num().get_si()));
  }
  return ordered_json(to_string(r));
}

}  // namespace

ordered_json verification_report(const RunInfo& info, const std::vector<CheckBlock>& blocks) {
  ordered_json report;
  report["tool"] = "pslab";
  report["version"] = kVersion;
  report["command"] = info.command;
  report["config"] = info.config;
  bool pass = true;
  ordered_json checks = ordered_json::array();
  ordered_json first_counterexample;
  for (const CheckBlock& b : blocks) {
    pass = pass && b.pass;
    ordered_json block;
    block["name"] = b.name;
    block["k"] = b.level;
    if (b.index >= 0) block["i"] = b.index;
    block["pass"] = b.pass;
    ordered_json rows = ordered_json::array();
    for (const auto& r : b.piece_rows) {
      rows.push_back(piece_row_json(r));
      if (!r.equal && first_counterexample.is_null()) {
        first_counterexample = {{"check", b.name}, {"k", r.level},     {"i", r.index},
                                {"weight", r.weight}, {"charge", r.charge}, {"witness", r.witness}};
      }
    }
    for (const auto& r : b.check_rows) {
      rows.push_back(check_row_json(r));
      if (!r.pass && first_counterexample.is_null()) {
        first_counterexample = {{"check", r.check},   {"k", r.level},       {"i", r.index},
                                {"weight", r.weight}, {"charge", r.charge}, {"witness", r.detail}};
      }
    }
    block["rows"] = std::move(rows);
    checks.push_back(std::move(block));
  }
  report["checks"] = std::move(checks);
  report["pass"] = pass;
  if (!first_counterexample.is_null()) report["first_counterexample"] = first_counterexample;
  if (info.timing) report["timing_ms"] = info.elapsed_ms;
  return report;
}

std::string render_verification(const ordered_json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream os;
  if (format == "csv") {
    os << "check,k,i,weight,charge,dim_monomials,dim_ideal,dim_kernel,pass,detail\n";
    for (const auto& block : report.at("checks")) {
      const std::string name = block.at("name");
      const int k = block.at("k");
      const std::string block_i = block.contains("i") ? std::to_string(int(block.at("i"))) : "";
      for (const auto& row : block.at("rows")) {
        const std::string check = row.contains("check") ? std::string(row.at("check")) : name;
        const std::string i =
            row.contains("i") ? std::to_string(int(row.at("i"))) : block_i;
        const bool pass = row.contains("equal") ? bool(row.at("equal")) : bool(row.at("pass"));
        os << csv_escape(check) << "," << k << "," << i << "," << int(row.at("weight")) << ","
           << int(row.at("charge")) << ",";
        if (row.contains("dim_monomials")) {
          os << int(row.at("dim_monomials")) << "," << int(row.at("dim_ideal")) << ","
             << int(row.at("dim_kernel"));
        } else {
          os << ",,";
        }
        std::string detail;
        if (row.contains("witness")) detail = row.at("witness");
        if (row.contains("detail")) detail = row.at("detail");
        os << "," << (pass ? "pass" : "FAIL") << "," << csv_escape(detail) << "\n";
      }
    }
    return os.str();
  }
  // Aligned text table.
  for (const auto& block : report.at("checks")) {
    os << "== " << std::string(block.at("name")) << "  k=" << int(block.at("k"));
    if (block.contains("i")) os << " i=" << int(block.at("i"));
    os << "  " << (bool(block.at("pass")) ? "pass" : "FAIL") << " ==\n";
    for (const auto& row : block.at("rows")) {
      const bool pass = row.contains("equal") ? bool(row.at("equal")) : bool(row.at("pass"));
      os << "  (" << std::setw(2) << int(row.at("weight")) << "," << std::setw(2)
         << int(row.at("charge")) << ")";
      if (row.contains("dim_monomials")) {
        os << "  monomials " << std::setw(3) << int(row.at("dim_monomials")) << "  ideal "
           << std::setw(3) << int(row.at("dim_ideal")) << "  kernel " << std::setw(3)
           << int(row.at("dim_kernel"));
      } else if (row.contains("check")) {
        os << "  " << std::string(row.at("check"));
      }
      os << "  " << (pass ? "pass" : "FAIL");
      if (row.contains("witness")) os << "  witness: " << std::string(row.at("witness"));
      if (row.contains("detail")) os << "  " << std::string(row.at("detail"));
      os << "\n";
    }
  }
  os << "overall: " << (bool(report.at("pass")) ? "pass" : "FAIL") << "\n";
  return os.str();
}

ordered_json series_json(const BivariateSeries& s) {
  ordered_json rows = ordered_json::array();
  for (const auto& [charge, series] : s.rows()) {
    ordered_json coeffs = ordered_json::array();
    for (int n = 0; n <= series.order(); ++n) coeffs.push_back(coefficient_json(series.coeff(n)));
    rows.push_back(ordered_json::array({charge, coeffs}));
  }
  return rows;
}

ordered_json char_report(const RunInfo& info, const CharResult& r) {
  ordered_json report;
  report["tool"] = "pslab";
  report["version"] = kVersion;
  report["command"] = info.command;
  report["config"] = info.config;
  report["k"] = r.level;
  report["i"] = r.index;
  report["order"] = r.order;
  report["dimension_table"] = series_json(r.dims);
  report["difference_two"] = series_json(r.counts);
  report["fermionic"] = series_json(r.fermionic);
  report["fermionic_convention"] = "last_i";
  report["matches"] = {{"difference_two", r.counts_match}, {"fermionic", r.fermionic_match}};
  report["pass"] = r.counts_match && r.fermionic_match;
  if (info.timing) report["timing_ms"] = info.elapsed_ms;
  return report;
}

std::string render_char(const ordered_json& report, const CharResult& r,
                        const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream os;
  if (format == "csv") {
    os << "k,i,charge,weight,dimension,difference_two,fermionic,match\n";
    for (int c = 0; c <= r.order; ++c) {
      for (int n = 0; n <= r.order; ++n) {
        const Rational d = r.dims.coeff(c, n);
        const Rational dt = r.counts.coeff(c, n);
        const Rational f = r.fermionic.coeff(c, n);
        if (d == 0 && dt == 0 && f == 0) continue;
        os << r.level << "," << r.index << "," << c << "," << n << "," << to_string(d) << ","
           << to_string(dt) << "," << to_string(f) << ","
           << ((d == dt && d == f) ? "match" : "MISMATCH") << "\n";
      }
    }
    return os.str();
  }
  os << "character tables for k=" << r.level << " i=" << r.index << " to order q^" << r.order
     << "\n";
  os << std::setw(7) << "charge" << std::setw(7) << "weight" << std::setw(7) << "dim"
     << std::setw(7) << "diff2" << std::setw(10) << "fermionic" << "  status\n";
  for (int c = 0; c <= r.order; ++c) {
    for (int n = 0; n <= r.order; ++n) {
      const Rational d = r.dims.coeff(c, n);
      const Rational dt = r.counts.coeff(c, n);
      const Rational f = r.fermionic.coeff(c, n);
      if (d == 0 && dt == 0 && f == 0) continue;
      os << std::setw(7) << c << std::setw(7) << n << std::setw(7) << to_string(d) << std::setw(7)
         << to_string(dt) << std::setw(10) << to_string(f) << "  "
         << ((d == dt && d == f) ? "match" : "MISMATCH") << "\n";
    }
  }
  os << "overall: " << (bool(report.at("pass")) ? "match" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace pslab::cli

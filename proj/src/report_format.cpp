#include "shl/report_format.hpp"

#include <iomanip>
#include <sstream>

namespace shl {

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

std::string row(const VectorQ& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

bool selected(std::optional<int> degree, int k) { return !degree || *degree == k; }

void emit_basis(std::ostringstream& os, const std::string& name, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i) os << "basis." << name << '.' << i << " = " << row(s.basis_vector(i)) << '\n';
}

}  // namespace

std::string format_basis(const Subspace& s) {
  std::string out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += "; ";
    out += row(s.basis_vector(i));
  }
  return out.empty() ? "[]" : out;
}

std::string format_report_machine(const CohomologyReport& r, std::optional<int> degree) {
  std::ostringstream os;
  os << "dim = " << r.dim << '\n' << "lambda = " << to_string(r.lambda) << '\n';
  for (const auto& d : r.degrees) {
    if (!selected(degree, d.k)) continue;
    os << "b." << d.k << " = " << d.b << '\n';
    os << "h_bc." << d.k << " = " << d.h_bc << '\n';
    os << "h_ae." << d.k << " = " << d.h_ae << '\n';
    os << "delta_s." << d.k << " = " << d.delta_s << '\n';
  }
  for (std::size_t k = 0; k < r.hlc.size(); ++k)
    if (selected(degree, static_cast<int>(k))) os << "hlc." << k << " = " << flag(r.hlc[k]) << '\n';
  if (!degree || *degree == 2) {
    os << "h_plus_J = " << r.h_plus_J << '\n' << "h_minus_J = " << r.h_minus_J << '\n';
    if (r.b2_plus) os << "b2_plus = " << *r.b2_plus << '\n' << "b2_minus = " << *r.b2_minus << '\n';
    os << "dim_ker_PJ = " << r.dim_ker_PJ << '\n' << "dim_V = " << r.dim_V << '\n';
    os << "pure_and_full = " << flag(r.pure_and_full) << '\n';
    os << "harmonic_j_split = " << flag(r.harmonic_j_split) << '\n';
    os << "harmonic_dR_in_bc = " << flag(r.harmonic_dR_in_bc) << '\n';
  }
  os << "hlc_holds = " << flag(r.hlc_holds) << '\n';
  if (!degree || *degree == 2) {
    emit_basis(os, "harmonic_dR.2", r.harmonic_dR2);
    emit_basis(os, "harmonic_bc.2", r.harmonic_bc2);
    emit_basis(os, "V", r.V);
  }
  return os.str();
}

std::string format_report_table(const CohomologyReport& r, std::optional<int> degree) {
  std::ostringstream os;
  os << "dimension " << r.dim << ", lambda " << to_string(r.lambda) << "\n\n";
  os << std::setw(3) << "k" << std::setw(6) << "b" << std::setw(7) << "h_bc" << std::setw(7) << "h_ae" << std::setw(9)
     << "delta_s" << std::setw(6) << "hlc" << '\n';
  for (const auto& d : r.degrees) {
    if (!selected(degree, d.k)) continue;
    os << std::setw(3) << d.k << std::setw(6) << d.b << std::setw(7) << d.h_bc << std::setw(7) << d.h_ae << std::setw(9)
       << d.delta_s;
    if (static_cast<std::size_t>(d.k) < r.hlc.size()) os << std::setw(6) << (r.hlc[d.k] ? "yes" : "no");
    os << '\n';
  }
  if (!degree || *degree == 2) {
    os << '\n';
    os << "h+_J = " << r.h_plus_J << ", h-_J = " << r.h_minus_J;
    if (r.b2_plus) os << ", b2+ = " << *r.b2_plus << ", b2- = " << *r.b2_minus;
    os << '\n';
    os << "dim ker P_J = " << r.dim_ker_PJ << ", dim V = " << r.dim_V << '\n';
    os << "C-infinity pure and full: " << (r.pure_and_full ? "yes" : "no") << '\n';
    os << "harmonic J-split: " << (r.harmonic_j_split ? "yes" : "no") << '\n';
    os << "harmonic 2-forms are d+d^L harmonic: " << (r.harmonic_dR_in_bc ? "yes" : "no") << '\n';
  }
  os << "hard Lefschetz: " << (r.hlc_holds ? "yes" : "no") << '\n';
  return os.str();
}

std::string format_verdicts_machine(const std::vector<TheoremVerdict>& verdicts) {
  std::ostringstream os;
  for (const auto& v : verdicts) {
    const std::string key = "verdict." + v.claim_id;
    os << key << " = " << (v.consistent ? "consistent" : "INCONSISTENT") << '\n';
    os << key << ".hypothesis = " << flag(v.hypothesis_holds) << '\n';
    os << key << ".conclusion = " << flag(v.conclusion_holds) << '\n';
    for (const auto& [name, value] : v.witnesses) os << key << ".witness." << name << " = " << value << '\n';
  }
  return os.str();
}

std::string format_verdicts_table(const std::vector<TheoremVerdict>& verdicts) {
  std::ostringstream os;
  for (const auto& v : verdicts) {
    os << std::left << std::setw(14) << v.claim_id << std::right << "hypothesis=" << flag(v.hypothesis_holds)
       << " conclusion=" << flag(v.conclusion_holds);
    if (!v.detail.empty()) os << "  " << v.detail;
    os << "  " << (v.consistent ? "CONSISTENT" : "INCONSISTENT") << '\n';
    if (!v.consistent)
      for (const auto& [name, value] : v.witnesses) os << "    " << name << ": " << value << '\n';
  }
  return os.str();
}

}  // namespace shl

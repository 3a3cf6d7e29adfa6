#include "hetero/report_io.hpp"

#include <sstream>

#include "hetero/model_file.hpp"

namespace hetero {

namespace {

using nlohmann::json;

json matrix_json(const ScalarMatrix& m, const std::vector<std::string>& order) {
  json rows = json::array();
  for (int i = 1; i <= m.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(m(i, j).to_string(order));
    rows.push_back(std::move(row));
  }
  return rows;
}

json assignment_json(const Assignment& a) {
  json out = json::object();
  for (const auto& [k, v] : a) out[k] = to_string(v);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string ratio_text(const AlphaPrime& alpha, const std::vector<std::string>& order) {
  if (alpha.status != AlphaPrime::Status::Ratio) return to_string(alpha.status);
  std::string num = alpha.numerator.to_string(order);
  if (alpha.denominator == Scalar(1L)) return num;
  if (alpha.numerator.terms().size() > 1) num = "(" + num + ")";
  return num + " / (" + alpha.denominator.to_string(order) + ")";
}

}  // namespace

json report_to_json(const VerificationReport& r) {
  const auto& order = r.params;
  json j;
  j["schema"] = kReportSchema;
  j["name"] = r.name;
  j["dim"] = r.dim;
  j["params"] = r.params;
  j["conventions"] = r.conventions;
  j["connection"] = to_string(r.connection);

  json s;
  s["kind"] = to_string(r.kind);
  if (r.g2_class) {
    s["cocalibrated"] = r.g2_class->cocalibrated;
    s["pure_type"] = r.g2_class->pure_type;
  }
  if (r.spin7_class) s["balanced"] = r.spin7_class->balanced;
  s["lee_form"] = r.lee_form.to_string(order);
  s["lee_forms_agree"] = r.lee_forms_agree;
  j["structure_class"] = s;

  j["torsion"] = {{"T", r.torsion.to_string(order)},
                  {"dT", r.d_torsion.to_string(order)},
                  {"connection_roundtrip", r.torsion_roundtrip},
                  {"nabla_plus_T_zero", r.nabla_plus_torsion_zero}};

  j["instanton"] = {{"name", r.instanton_name},
                    {"present", r.instanton_present},
                    {"ok", r.instanton_ok},
                    {"q1", r.q1_instanton.to_string(order)}};
  j["q1_gravity"] = r.q1_gravity.to_string(order);

  json a;
  a["status"] = to_string(r.alpha_prime.status);
  if (r.alpha_prime.status == AlphaPrime::Status::Ratio) {
    a["numerator"] = r.alpha_prime.numerator.to_string(order);
    a["denominator"] = r.alpha_prime.denominator.to_string(order);
  }
  a["diagnostic"] = r.alpha_prime.diagnostic;
  json pos = json::array();
  for (const auto& p : r.positivity) {
    json e;
    e["point"] = assignment_json(p.point);
    e["value"] = p.value ? json(to_string(*p.value)) : json(nullptr);
    e["positive"] = p.positive;
    pos.push_back(std::move(e));
  }
  a["positivity"] = pos;
  j["alpha_prime"] = a;

  j["quadratic_condition"] = {{"zero", r.quadratic_condition_zero},
                              {"symmetric", r.quadratic_condition_symmetric},
                              {"residual", matrix_json(r.quadratic_condition, order)}};

  j["motion_residuals"] = {{"einstein_zero", r.einstein_zero},
                           {"einstein", matrix_json(r.einstein, order)},
                           {"torsion_divergence_zero", r.torsion_divergence_zero},
                           {"instanton_divergence_zero", r.instanton_divergence_zero},
                           {"codifferential_agrees", r.codifferential_agrees},
                           {"einstein_routes_agree", r.chain_agrees}};

  json ids = json::array();
  for (const auto& i : r.identities)
    ids.push_back({{"name", i.name},
                   {"statement", i.statement},
                   {"zero", i.zero},
                   {"nonzero_entries", i.nonzero_entries}});
  j["identities"] = ids;

  json gold = json::array();
  for (const auto& g : r.golden)
    gold.push_back({{"id", g.id}, {"matches", g.matches}, {"expected", g.expected}, {"recomputed", g.recomputed}});
  j["golden"] = gold;

  json disc = json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back({{"quantity", d.quantity}, {"printed", d.printed}, {"recomputed", d.recomputed}, {"note", d.note}});
  j["discrepancies"] = disc;

  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"check", v.check}, {"pass", v.pass}, {"detail", v.detail}});
  j["verdicts"] = verdicts;
  j["passed"] = r.passed();
  return j;
}

std::string render_text(const VerificationReport& r) {
  const auto& order = r.params;
  std::ostringstream out;
  out << "model " << r.name << " (dim " << r.dim << ", " << to_string(r.kind) << ")\n";
  if (!r.params.empty()) {
    out << "params";
    for (const auto& p : r.params) out << " " << p;
    out << "\n";
  }
  out << "connection " << to_string(r.connection) << "\n\n";

  out << "structure\n";
  if (r.g2_class)
    out << "  cocalibrated " << yes_no(r.g2_class->cocalibrated) << ", pure type "
        << yes_no(r.g2_class->pure_type) << "\n";
  if (r.spin7_class) out << "  balanced " << yes_no(r.spin7_class->balanced) << "\n";
  out << "  Lee form " << r.lee_form.to_string(order) << "\n";
  out << "  T  = " << r.torsion.to_string(order) << "\n";
  out << "  dT = " << r.d_torsion.to_string(order) << "\n";
  out << "  nabla+ T = 0: " << yes_no(r.nabla_plus_torsion_zero) << "\n\n";

  out << "instanton " << r.instanton_name << (r.instanton_present ? "" : " (none given)") << "\n";
  out << "  q1(instanton) = " << r.q1_instanton.to_string(order) << "\n";
  out << "  q1(" << to_string(r.connection) << ") = " << r.q1_gravity.to_string(order) << "\n\n";

  out << "alpha' = " << ratio_text(r.alpha_prime, order) << "\n";
  if (!r.alpha_prime.diagnostic.empty()) out << "  " << r.alpha_prime.diagnostic << "\n";
  for (const auto& p : r.positivity) {
    out << "  at {" << format_assignment(p.point, order) << "}: ";
    if (p.value) {
      out << to_string(*p.value) << (p.positive ? " > 0" : " <= 0") << "\n";
    } else {
      out << "undefined\n";
    }
  }
  out << "\n";

  out << "quadratic condition residual zero: " << yes_no(r.quadratic_condition_zero)
      << " (symmetric: " << yes_no(r.quadratic_condition_symmetric) << ")\n";
  out << "equations of motion: einstein " << (r.einstein_zero ? "0" : "nonzero") << ", torsion divergence "
      << (r.torsion_divergence_zero ? "0" : "nonzero") << ", instanton divergence "
      << (r.instanton_divergence_zero ? "0" : "nonzero") << "\n";
  if (!r.einstein_zero) {
    for (int i = 1; i <= r.einstein.size(); ++i)
      for (int k = i; k <= r.einstein.size(); ++k)
        if (!r.einstein(i, k).is_zero())
          out << "  E(" << i << "," << k << ") = " << r.einstein(i, k).to_string(order) << "\n";
  }
  out << "\nidentities\n";
  for (const auto& i : r.identities)
    out << "  " << (i.zero ? "ok  " : "FAIL") << " " << i.name << "  [" << i.statement << "]\n";

  if (!r.golden.empty()) {
    out << "\ngolden values\n";
    for (const auto& g : r.golden) {
      out << "  " << (g.matches ? "ok  " : "FAIL") << " " << g.id << "\n";
      if (!g.matches) out << "       expected   " << g.expected << "\n       recomputed " << g.recomputed << "\n";
    }
  }
  if (!r.discrepancies.empty()) {
    out << "\ndiscrepancies\n";
    for (const auto& d : r.discrepancies) {
      out << "  " << d.quantity << "\n    printed    " << d.printed << "\n    recomputed " << d.recomputed << "\n";
      if (!d.note.empty()) out << "    note: " << d.note << "\n";
    }
  }
  out << "\nverdicts\n";
  for (const auto& v : r.verdicts)
    out << "  " << (v.pass ? "PASS" : "FAIL") << " " << v.check << ": " << v.detail << "\n";
  out << "\nresult: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

nlohmann::json identities_to_json(const std::string& name, const std::vector<IdentityResult>& results) {
  json j;
  j["schema"] = kReportSchema;
  j["name"] = name;
  json ids = json::array();
  bool all = true;
  for (const auto& i : results) {
    ids.push_back({{"name", i.name}, {"statement", i.statement}, {"zero", i.zero}, {"nonzero_entries", i.nonzero_entries}});
    all = all && i.zero;
  }
  j["identities"] = ids;
  j["passed"] = all;
  return j;
}

std::string render_identities_text(const std::string& name, const std::vector<IdentityResult>& results) {
  std::ostringstream out;
  out << "identities for " << name << "\n";
  bool all = true;
  for (const auto& i : results) {
    out << "  " << (i.zero ? "PASS" : "FAIL") << " " << i.name << ": " << i.statement;
    if (!i.zero) out << " (" << i.nonzero_entries << " nonzero residual entries)";
    out << "\n";
    all = all && i.zero;
  }
  out << "\nresult: " << (all ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::vector<std::pair<std::string, bool>> verdicts_from_json(const nlohmann::json& document) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& v : document.at("verdicts")) out.emplace_back(v.at("check").get<std::string>(), v.at("pass").get<bool>());
  return out;
}

std::vector<std::pair<std::string, bool>> verdicts_from_text(const std::string& text) {
  std::vector<std::pair<std::string, bool>> out;
  std::istringstream in(text);
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line == "verdicts") {
      inside = true;
      continue;
    }
    if (!inside) continue;
    if (line.rfind("  PASS ", 0) != 0 && line.rfind("  FAIL ", 0) != 0) break;
    std::string rest = line.substr(7);
    out.emplace_back(rest.substr(0, rest.find(':')), line[2] == 'P');
  }
  return out;
}

}  // namespace hetero

#include "c2charge/render.hpp"

#include "c2charge/charge.hpp"
#include "c2charge/kn_tableaux.hpp"
#include "c2charge/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace c2c {

namespace {

using nlohmann::json;

void require_dominant(Weight lam) {
  if (!is_dominant(lam))
    throw std::invalid_argument("lambda must be dominant, got " + to_string(lam));
}

void require_format(const std::string& format) {
  if (format != "json" && format != "csv" && format != "text")
    throw std::invalid_argument("unknown format: " + format);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json weight_json(Weight w) { return json::array({w.l1, w.l2}); }

std::string finish_json(json& doc) { return doc.dump(2) + "\n"; }

// Tableaux aligned to string elements through the unique isomorphism.
std::vector<KNTableau> tableaux_by_string_index(const Crystal& crystal) {
  TableauCrystal tabs(crystal.highest_weight());
  std::vector<size_t> match = isomorphism(tabs, crystal);
  std::vector<KNTableau> out(crystal.size());
  for (size_t ti = 0; ti < tabs.size(); ++ti) out[match[ti]] = tabs.tableau(ti);
  return out;
}

}  // namespace

std::string render_crystal(Weight lam, const std::string& format) {
  require_dominant(lam);
  require_format(format);
  Crystal crystal(lam);
  std::vector<KNTableau> tabs = tableaux_by_string_index(crystal);
  if (format == "json") {
    json doc{{"schema", "c2charge/1"}, {"lambda", weight_json(lam)}, {"command", "crystal"}};
    json rows = json::array();
    for (size_t i = 0; i < crystal.size(); ++i) {
      Element el = crystal.element(i);
      rows.push_back(json{{"str2", {el.s.a, el.s.b, el.s.c, el.s.d}},
                          {"weight", weight_json(weight(el))},
                          {"tableau", {render_row(tabs[i].row1), render_row(tabs[i].row2)}},
                          {"eps1", eps1(el)},
                          {"eps2", eps2(el)},
                          {"eps12", eps12(el)},
                          {"phi1", phi1(el)},
                          {"phi2", phi2(el)},
                          {"phi12", phi12(el)}});
    }
    doc["rows"] = rows;
    return finish_json(doc);
  }
  std::ostringstream out;
  if (format == "csv")
    out << "a,b,c,d,weight1,weight2,tableau_row1,tableau_row2,eps1,eps2,eps12,phi1,phi2,phi12\n";
  for (size_t i = 0; i < crystal.size(); ++i) {
    Element el = crystal.element(i);
    Weight mu = weight(el);
    if (format == "csv") {
      out << el.s.a << ',' << el.s.b << ',' << el.s.c << ',' << el.s.d << ',' << mu.l1 << ','
          << mu.l2 << ',' << csv_escape(render_row(tabs[i].row1)) << ','
          << csv_escape(render_row(tabs[i].row2)) << ',' << eps1(el) << ',' << eps2(el) << ','
          << eps12(el) << ',' << phi1(el) << ',' << phi2(el) << ',' << phi12(el) << '\n';
    } else {
      out << "str2=" << to_string(el.s) << "  wt=" << to_string(mu)
          << "  tableau=[" << render_row(tabs[i].row1) << " | " << render_row(tabs[i].row2)
          << "]  eps=(" << eps1(el) << ',' << eps2(el) << ',' << eps12(el) << ")  phi=("
          << phi1(el) << ',' << phi2(el) << ',' << phi12(el) << ")\n";
    }
  }
  return out.str();
}

std::string render_decompose(Weight lam, const std::string& format) {
  require_dominant(lam);
  require_format(format);
  Crystal crystal(lam);
  Decomposition dec(crystal);
  ChargeContext ctx(dec);
  auto charge_of = [&](size_t i) -> std::optional<long long> {
    if (!is_dominant(weight(crystal.element(i)))) return std::nullopt;
    return ctx.charge_atomic(i);
  };
  if (format == "json") {
    json doc{{"schema", "c2charge/1"}, {"lambda", weight_json(lam)}, {"command", "decompose"}};
    json rows = json::array();
    for (size_t i = 0; i < crystal.size(); ++i) {
      Element el = crystal.element(i);
      json row{{"str2", {el.s.a, el.s.b, el.s.c, el.s.d}},
               {"weight", weight_json(weight(el))},
               {"pat", dec.pat(i)},
               {"at", dec.at(i)},
               {"zeta", weight_json(dec.zeta(i))}};
      auto c = charge_of(i);
      row["charge"] = c ? json(*c) : json(nullptr);
      rows.push_back(row);
    }
    doc["rows"] = rows;
    json census = json::array();
    for (const auto& [id, size] : dec.census())
      census.push_back(json{{"zeta", weight_json(id.zeta)},
                            {"pat", id.pat},
                            {"at", id.at},
                            {"size", size}});
    doc["census"] = census;
    return finish_json(doc);
  }
  std::ostringstream out;
  if (format == "csv") out << "a,b,c,d,weight1,weight2,pat,at,zeta1,zeta2,charge\n";
  for (size_t i = 0; i < crystal.size(); ++i) {
    Element el = crystal.element(i);
    Weight mu = weight(el);
    auto c = charge_of(i);
    std::string ch = c ? std::to_string(*c) : std::string();
    if (format == "csv") {
      out << el.s.a << ',' << el.s.b << ',' << el.s.c << ',' << el.s.d << ',' << mu.l1 << ','
          << mu.l2 << ',' << dec.pat(i) << ',' << dec.at(i) << ',' << dec.zeta(i).l1 << ','
          << dec.zeta(i).l2 << ',' << ch << '\n';
    } else {
      out << "str2=" << to_string(el.s) << "  wt=" << to_string(mu) << "  pat=" << dec.pat(i)
          << "  at=" << dec.at(i) << "  zeta=" << to_string(dec.zeta(i))
          << "  charge=" << (c ? ch : "-") << '\n';
    }
  }
  if (format == "text") {
    out << "census:\n";
    for (const auto& [id, size] : dec.census())
      out << "  zeta=" << to_string(id.zeta) << " pat=" << id.pat << " at=" << id.at
          << " size=" << size << '\n';
  }
  return out.str();
}

RenderResult render_kostka(Weight lam, std::optional<Weight> mu, const std::string& format) {
  require_dominant(lam);
  require_format(format);
  Crystal crystal(lam);
  Decomposition dec(crystal);
  ChargeContext ctx(dec);
  std::vector<Weight> mus;
  if (mu) {
    if (!is_dominant(*mu) || !dominance_leq(*mu, lam))
      throw std::invalid_argument("mu must be dominant and <= lambda");
    mus.push_back(*mu);
  } else {
    mus = dominant_weights_leq(lam);
  }
  bool all_match = true;
  struct Row {
    Weight mu;
    std::string charge, oracle;
    bool match;
  };
  std::vector<Row> rows;
  for (Weight m : mus) {
    Laurent via_charge = ctx.kostka_via_charge(m);
    Laurent via_oracle = kostka_foulkes(lam, m);
    bool match = via_charge == via_oracle;
    all_match = all_match && match;
    rows.push_back({m, via_charge.str("q"), via_oracle.str("q"), match});
  }
  std::string text;
  if (format == "json") {
    json doc{{"schema", "c2charge/1"}, {"lambda", weight_json(lam)}, {"command", "kostka"}};
    json jrows = json::array();
    for (const Row& r : rows)
      jrows.push_back(json{{"mu", weight_json(r.mu)},
                           {"charge", r.charge},
                           {"oracle", r.oracle},
                           {"match", r.match}});
    doc["rows"] = jrows;
    doc["all_match"] = all_match;
    text = finish_json(doc);
  } else {
    std::ostringstream out;
    if (format == "csv") out << "mu1,mu2,charge,oracle,match\n";
    for (const Row& r : rows) {
      if (format == "csv")
        out << r.mu.l1 << ',' << r.mu.l2 << ',' << csv_escape(r.charge) << ','
            << csv_escape(r.oracle) << ',' << (r.match ? "true" : "false") << '\n';
      else
        out << "mu=" << to_string(r.mu) << "  charge: " << r.charge << "  oracle: " << r.oracle
            << "  match: " << (r.match ? "true" : "false") << '\n';
    }
    text = out.str();
  }
  return {text, all_match};
}

std::string render_graph(Weight lam, std::optional<long long> m) {
  require_dominant(lam);
  BruhatGraph g(lam);
  return to_dot(g, m);
}

RenderResult render_verify(long long bound, long long jobs, const std::string& format) {
  require_format(format);
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  std::vector<CheckResult> checks = run_acceptance(bound, jobs);
  bool all = true;
  for (const CheckResult& c : checks) all = all && c.passed;
  std::string text;
  if (format == "json") {
    json doc{{"schema", "c2charge/1"}, {"command", "verify"}, {"bound", bound}};
    json rows = json::array();
    for (const CheckResult& c : checks)
      rows.push_back(json{{"criterion", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["rows"] = rows;
    doc["all_passed"] = all;
    text = finish_json(doc);
  } else {
    std::ostringstream out;
    if (format == "csv") out << "criterion,passed,detail\n";
    for (const CheckResult& c : checks) {
      if (format == "csv")
        out << csv_escape(c.name) << ',' << (c.passed ? "true" : "false") << ','
            << csv_escape(c.detail) << '\n';
      else
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.name
            << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    }
    text = out.str();
  }
  return {text, all};
}

}  // namespace c2c

#include "trigonal/report.hpp"

#include "trigonal/errors.hpp"
#include "trigonal/mckay.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>

namespace trigonal {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json cyc3_json(const Cyc3& z) { return {{"a", z.a().to_string()}, {"b", z.b().to_string()}}; }

ordered_json lint_json(const LinT& v) {
  return {{"const", cyc3_json(v.constant())}, {"t1", cyc3_json(v.t1_coeff())}, {"t2", cyc3_json(v.t2_coeff())}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

// Quotes a CSV field when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) {
      out += ',';
    }
    out += csv_field(f);
  }
  return out + "\n";
}

std::string components_cell(const std::vector<std::pair<ComponentLabel, Rational>>& comps) {
  std::string out;
  for (const auto& [label, value] : comps) {
    if (!out.empty()) {
      out += ';';
    }
    out += std::to_string(label.l) + ":" + value.to_string();
  }
  return out;
}

const char* class_name(ClassId id) {
  switch (id) {
    case ClassId::One:
      return "1";
    case ClassId::C1:
      return "C1";
    case ClassId::C2:
      return "C2";
  }
  return "?";
}

std::string coefficients_cell(const CycElement& e) {
  std::string out;
  for (const auto& c : e.coefficients()) {
    out += (out.empty() ? "" : " ") + c.to_string();
  }
  return "[" + out + "]";
}

ordered_json coefficients_json(const CycElement& e) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : e.coefficients()) {
    arr.push_back(c.to_string());
  }
  return arr;
}

Rendered render_checks(const std::string& title, const std::string& key, int key_value,
                       const std::vector<TableCheck>& checks, Format format) {
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
  }
  Rendered r{"", all};
  switch (format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      r.body = dump({{key, key_value}, {"checks", arr}, {"all_pass", all}});
      break;
    }
    case Format::Csv:
      r.body = csv_row({"name", "pass", "detail"});
      for (const auto& c : checks) {
        r.body += csv_row({c.name, c.pass ? "true" : "false", c.detail});
      }
      break;
    case Format::Text:
      r.body = title + "\n";
      for (const auto& c : checks) {
        r.body += "  " + pass_word(c.pass) + "  " + c.name + (c.detail.empty() ? "" : "  (" + c.detail + ")") + "\n";
      }
      r.body += (all ? "all checks pass\n" : "some checks FAIL\n");
      break;
  }
  return r;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") {
    return Format::Text;
  }
  if (name == "json") {
    return Format::Json;
  }
  if (name == "csv") {
    return Format::Csv;
  }
  throw InvalidArgument("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

Rendered render_table(const HodgeTable& table, Format format) {
  Rendered r;
  const int top = table.max_genus();
  switch (format) {
    case Format::Json: {
      ordered_json rows = ordered_json::array();
      for (int g = 0; g <= top; ++g) {
        ordered_json row{{"g", g}, {"B", table.B(g).to_string()}};
        row["Abullet"] = g == 0 ? ordered_json(nullptr) : ordered_json(table.Abullet(g).to_string());
        row["A"] = g == 0 ? ordered_json(nullptr) : ordered_json(table.A(g).to_string());
        row["gamma"] = json::parse(table.gamma(g).get_str());
        ordered_json comps = ordered_json::array();
        if (g >= 1) {
          for (const auto& [label, value] : table.components_of_genus(g)) {
            comps.push_back({{"l", label.l}, {"value", value.to_string()}});
          }
        }
        row["components"] = comps;
        rows.push_back(row);
      }
      r.body = dump(rows);
      break;
    }
    case Format::Csv:
      r.body = csv_row({"g", "B", "Abullet", "A", "gamma", "components"});
      for (int g = 0; g <= top; ++g) {
        r.body += csv_row({std::to_string(g), table.B(g).to_string(), g == 0 ? "" : table.Abullet(g).to_string(),
                           g == 0 ? "" : table.A(g).to_string(), table.gamma(g).get_str(),
                           g == 0 ? "" : components_cell(table.components_of_genus(g))});
      }
      break;
    case Format::Text: {
      std::ostringstream os;
      os << "g    B    Abullet    A    gamma    delta    components (l:value)\n";
      for (int g = 0; g <= top; ++g) {
        os << g << "    " << table.B(g) << "    " << (g == 0 ? "-" : table.Abullet(g).to_string()) << "    "
           << (g == 0 ? "-" : table.A(g).to_string()) << "    " << table.gamma(g) << "    "
           << (g == 0 ? "-" : table.delta(g).get_str()) << "    "
           << (g == 0 ? "-" : components_cell(table.components_of_genus(g))) << "\n";
      }
      r.body = os.str();
      break;
    }
  }
  return r;
}

Rendered render_components(const HodgeTable& table, int genus, Format format) {
  if (genus < 1 || genus > table.max_genus()) {
    throw InvalidArgument("genus " + std::to_string(genus) + " outside [1, " + std::to_string(table.max_genus()) + "]");
  }
  const auto comps = table.components_of_genus(genus);
  const Rational& a = table.A(genus);
  bool constant = true;
  for (const auto& [label, value] : comps) {
    constant = constant && value == a;
  }
  std::optional<ComponentSolution> sol;
  if (genus >= 4) {
    sol = solve_components(genus, table);
  }
  const bool closure = !sol || sol->redundant_closure_holds;
  const bool gamma_ok = table.Abullet(genus) == Rational(table.gamma(genus)) * a;
  Rendered r{"", constant && closure && gamma_ok};

  switch (format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& [label, value] : comps) {
        arr.push_back({{"l", label.l}, {"value", value.to_string()}});
      }
      ordered_json j{{"genus", genus},
                     {"nu", component_offset(genus)},
                     {"components", arr},
                     {"A", a.to_string()},
                     {"Abullet", table.Abullet(genus).to_string()},
                     {"gamma", json::parse(table.gamma(genus).get_str())},
                     {"constant", constant},
                     {"redundant_closure_holds", sol ? ordered_json(sol->redundant_closure_holds) : ordered_json(nullptr)},
                     {"equation_count", sol ? sol->equation_count : 0},
                     {"all_pass", r.all_pass}};
      r.body = dump(j);
      break;
    }
    case Format::Csv:
      r.body = csv_row({"genus", "l", "value"});
      for (const auto& [label, value] : comps) {
        r.body += csv_row({std::to_string(genus), std::to_string(label.l), value.to_string()});
      }
      break;
    case Format::Text: {
      std::ostringstream os;
      os << "genus " << genus << ": " << comps.size() << " component classes, gamma = " << table.gamma(genus) << "\n";
      for (const auto& [label, value] : comps) {
        os << "  A_" << genus << "^" << label.l << " = " << value << "\n";
      }
      os << "  constant: " << pass_word(constant) << "\n";
      if (sol) {
        os << "  redundant closure: " << pass_word(sol->redundant_closure_holds) << " (" << sol->equation_count
           << " E-equations)\n";
      }
      os << "  A•_g = gamma_g A_g: " << pass_word(gamma_ok) << "\n";
      r.body = os.str();
      break;
    }
  }
  return r;
}

Rendered render_recursions(const HodgeTable& table, Format format) {
  return render_checks("recursion cross-checks to genus " + std::to_string(table.max_genus()), "max_genus",
                       table.max_genus(), table.checks(), format);
}

Rendered render_theta(int order, Format format) {
  const auto th = theta_check(order);
  std::optional<std::pair<int, int>> bad;
  for (int d = 0; d <= order && !bad; ++d) {
    for (int r = d; r >= 0; --r) {
      const Rational expected = d == 0 ? Rational(1, 9) : Rational(0);
      if (th.at(r, d - r) != expected) {
        bad = {r, d - r};
        break;
      }
    }
  }
  const int factored_order = std::min(order, 10);
  const auto fac = theta_difference_factored(factored_order);
  bool factored_ok = true;
  for (int i = 0; i <= factored_order; ++i) {
    for (int j = 0; i + j <= factored_order; ++j) {
      factored_ok = factored_ok && fac.at(i, j) == Cyc3(th.at(i, j));
    }
  }
  std::vector<TableCheck> checks{
      {"theta_0 - theta_1 = 1/9", !bad,
       bad ? "v^" + std::to_string(bad->first) + " w^" + std::to_string(bad->second) + ": " +
                 th.at(bad->first, bad->second).to_string()
           : "total degree <= " + std::to_string(order)},
      {"Q_0^2 - Q_1 Q_-1 matches the double sums", factored_ok, "total degree <= " + std::to_string(factored_order)}};
  return render_checks("theta identity", "order", order, checks, format);
}

Rendered render_crc(const CrcReport& report, Format format) {
  Rendered r{"", report.all_pass};
  switch (format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& c : report.checks) {
        ordered_json mm = nullptr;
        if (c.first_mismatch) {
          mm = {{"monomial", c.first_mismatch->monomial}, {"fy", c.first_mismatch->fy}, {"fx", c.first_mismatch->fx}};
        }
        arr.push_back({{"idx", c.idx.to_string()}, {"status", c.pass ? "pass" : "fail"}, {"first_mismatch", mm}});
      }
      r.body = dump({{"order", report.order}, {"checks", arr}, {"all_pass", report.all_pass}});
      break;
    }
    case Format::Csv:
      r.body = csv_row({"idx", "status", "monomial", "fy", "fx"});
      for (const auto& c : report.checks) {
        const auto& m = c.first_mismatch;
        r.body += csv_row({c.idx.to_string(), c.pass ? "pass" : "fail", m ? m->monomial : "", m ? m->fy : "",
                           m ? m->fx : ""});
      }
      break;
    case Format::Text:
      r.body = "F^X = F^Y third partials to order " + std::to_string(report.order) + "\n";
      for (const auto& c : report.checks) {
        r.body += "  " + pass_word(c.pass) + "  d" + c.idx.to_string();
        if (c.first_mismatch) {
          r.body += "  at " + c.first_mismatch->monomial + ": " + c.first_mismatch->fy + " vs " + c.first_mismatch->fx;
        }
        r.body += "\n";
      }
      r.body += report.all_pass ? "all checks pass\n" : "some checks FAIL\n";
      break;
  }
  return r;
}

Rendered render_localization(Format format) {
  using enum ClassId;
  const std::array<std::array<ClassId, 3>, 10> triples = {{{One, One, One},
                                                           {One, One, C1},
                                                           {One, One, C2},
                                                           {One, C1, C1},
                                                           {One, C1, C2},
                                                           {One, C2, C2},
                                                           {C1, C1, C1},
                                                           {C1, C1, C2},
                                                           {C1, C2, C2},
                                                           {C2, C2, C2}}};
  Rendered r;
  ordered_json arr = ordered_json::array();
  if (format == Format::Csv) {
    r.body = csv_row({"a", "b", "c", "value"});
  }
  for (const auto& t : triples) {
    const auto v = triple_intersection(t[0], t[1], t[2]);
    switch (format) {
      case Format::Json:
        arr.push_back({{"classes", {class_name(t[0]), class_name(t[1]), class_name(t[2])}},
                       {"value", v.to_string()},
                       {"linear", lint_json(v.linear)},
                       {"inverse_t1t2", cyc3_json(v.inverse_t1t2)}});
        break;
      case Format::Csv:
        r.body += csv_row({class_name(t[0]), class_name(t[1]), class_name(t[2]), v.to_string()});
        break;
      case Format::Text:
        r.body += std::string("<") + class_name(t[0]) + ", " + class_name(t[1]) + ", " + class_name(t[2]) +
                  "> = " + v.to_string() + "\n";
        break;
    }
  }
  if (format == Format::Json) {
    r.body = dump({{"intersections", arr}});
  }
  return r;
}

Rendered render_duval(int n, Format format) {
  const auto t = duval_transform(n);
  const bool squares = entries_square_correctly(t);
  bool columns = true;
  for (int a = 1; a < 2 * n; ++a) {
    if (std::gcd(a, 2 * n) == 1) {
      columns = columns && galois_permutes_columns(t, a);
    }
  }
  const bool rows = conjugation_pairs_rows(t);
  const bool special = n == 3;
  const bool n3 = special && check_n3_specialization();
  Rendered r{"", squares && columns && rows && (!special || n3)};

  switch (format) {
    case Format::Json: {
      ordered_json matrix = ordered_json::array();
      for (const auto& row : t.matrix) {
        ordered_json jr = ordered_json::array();
        for (const auto& e : row) {
          jr.push_back(coefficients_json(e));
        }
        matrix.push_back(jr);
      }
      ordered_json qs = ordered_json::array();
      for (const auto& qv : t.q_values) {
        qs.push_back(coefficients_json(qv));
      }
      r.body = dump({{"n", n},
                     {"conductor", 2 * n},
                     {"basis_degree", t.field->degree()},
                     {"matrix", matrix},
                     {"q_values", qs},
                     {"entries_square", squares},
                     {"galois_permutes_columns", columns},
                     {"conjugation_pairs_rows", rows},
                     {"n3_specialization", special ? ordered_json(n3) : ordered_json(nullptr)},
                     {"all_pass", r.all_pass}});
      break;
    }
    case Format::Csv:
      r.body = csv_row({"row", "column", "coefficients"});
      for (int j = 1; j < n; ++j) {
        for (int k = 1; k < n; ++k) {
          r.body += csv_row({std::to_string(j), std::to_string(k), coefficients_cell(t.entry(j, k))});
        }
      }
      break;
    case Format::Text: {
      std::ostringstream os;
      os << "Z_" << n << " transform over Q(zeta_" << 2 * n << "), z = zeta_" << 2 * n << "\n";
      for (int j = 1; j < n; ++j) {
        os << "  y_R" << j << " =";
        for (int k = 1; k < n; ++k) {
          os << (k == 1 ? " " : " + ") << "(" << t.entry(j, k).to_string() << ")*x_" << k;
        }
        os << "\n";
      }
      os << "  q = " << t.q_values.front().to_string() << "\n";
      os << "  entry squares: " << pass_word(squares) << "\n";
      os << "  Galois permutes columns: " << pass_word(columns) << "\n";
      os << "  conjugation pairs rows: " << pass_word(rows) << "\n";
      if (special) {
        os << "  n = 3 specialization: " << pass_word(n3) << "\n";
      }
      r.body = os.str();
      break;
    }
  }
  return r;
}

}  // namespace trigonal

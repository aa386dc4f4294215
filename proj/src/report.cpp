#include "sspread/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Core>

namespace sspread {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json numbers(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void write(std::ostringstream& out, const Json& j, int depth) {
  const std::string pad(std::size_t(2 * (depth + 1)), ' ');
  const std::string close(std::size_t(2 * depth), ' ');
  if (j.is_number_float()) {
    const double x = j.get<double>();
    out << (std::isfinite(x) ? format17(x) : "null");
  } else if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      out << (first ? "" : ",\n") << pad << Json(key).dump() << ": ";
      write(out, value, depth + 1);
      first = false;
    }
    out << '\n' << close << '}';
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      out << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        write(out, j[i], depth + 1);
      }
      out << ']';
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << (i ? ",\n" : "") << pad;
      write(out, j[i], depth + 1);
    }
    out << '\n' << close << ']';
  } else {
    out << j.dump();
  }
}

std::string text_scalar(const Json& j) {
  if (j.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", j.get<double>());
    return buf;
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_object(const Json& j) {
  return j.is_object() && std::all_of(j.begin(), j.end(), [](const Json& v) {
           return is_scalar(v);
         });
}

// Rows share the keys of the first row.
void table(std::ostringstream& out, const Json& rows, const std::string& indent) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [key, value] : rows[0].items()) keys.push_back(key);
  std::vector<std::vector<std::string>> cells{keys};
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& key : keys) line.push_back(row.contains(key) ? text_scalar(row[key]) : "");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    out << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  }
}

void render(std::ostringstream& out, const Json& j, int depth) {
  const std::string indent(std::size_t(2 * depth), ' ');
  for (const auto& [key, value] : j.items()) {
    if (is_scalar(value)) {
      out << indent << key << ": " << text_scalar(value) << '\n';
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
      out << indent << key << ":";
      for (const auto& x : value) out << ' ' << text_scalar(x);
      out << '\n';
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_flat_object)) {
      out << indent << key << ":\n";
      table(out, value, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          out << indent << "  -\n";
          render(out, item, depth + 2);
        } else {
          out << indent << "  - " << text_scalar(item) << '\n';
        }
      }
    } else {
      out << indent << key << ":\n";
      render(out, value, depth + 1);
    }
  }
}

}  // namespace

Json versions() {
  Json v;
  v["sspread"] = std::string(library_version);
  v["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
               std::to_string(EIGEN_MINOR_VERSION);
  v["schema"] = report_schema;
  return v;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json to_json(const SpreadSeq& s) {
  Json j;
  j["model"] = std::string(to_string(s.model));
  j["values"] = numbers(s.values);
  j["tail"] = number(s.tail);
  j["tail_exact"] = s.tail_exact;
  return j;
}

Json to_json(const TwoSidedSeq& s) {
  Json j;
  j["model"] = std::string(to_string(s.model));
  j["pos"] = numbers(s.pos);
  j["neg"] = numbers(s.neg);
  j["pos_tail"] = s.pos_tail ? number(*s.pos_tail) : Json(nullptr);
  j["neg_tail"] = s.neg_tail ? number(*s.neg_tail) : Json(nullptr);
  j["tail_exact"] = s.tail_exact;
  return j;
}

Json to_json(const MajorizationReport& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["holds"] = r.holds;
  j["margins"] = numbers(r.margins_upper);
  if (r.kind == MajorizationKind::majorization) j["margins_lower"] = numbers(r.margins_lower);
  j["worst_k"] = r.worst_k;
  j["worst_margin"] = number(r.worst_margin);
  j["tolerance"] = number(r.tolerance);
  j["tail_verdict"] = std::string(to_string(r.tail_verdict));
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["ineq_id"] = v.ineq_id;
  j["holds"] = v.holds;
  j["claim"] = std::string(to_string(v.claim));
  j["mode"] = std::string(to_string(v.mode));
  if (v.claim == ClaimKind::entrywise && v.entrywise) {
    j["margins"] = numbers(v.entrywise->margins);
    j["worst_k"] = v.entrywise->worst_i;
    j["worst_margin"] = number(v.entrywise->worst_margin);
    j["tolerance"] = number(v.entrywise->tolerance);
  } else {
    j["margins"] = numbers(v.report.margins_upper);
    if (v.report.kind == MajorizationKind::majorization) j["margins_lower"] = numbers(v.report.margins_lower);
    j["worst_k"] = v.report.worst_k;
    j["worst_margin"] = number(v.report.worst_margin);
    j["tolerance"] = number(v.report.tolerance);
  }
  j["tail_verdict"] = std::string(to_string(v.report.tail_verdict));
  j["lhs"] = to_json(v.lhs);
  j["rhs"] = to_json(v.rhs);
  if (v.entrywise) {
    Json e;
    e["holds"] = v.entrywise->holds;
    e["margins"] = numbers(v.entrywise->margins);
    e["first_violation"] = v.entrywise->first_violation ? Json(*v.entrywise->first_violation) : Json(nullptr);
    j["entrywise"] = e;
  } else {
    j["entrywise"] = nullptr;
  }
  j["entrywise_fails"] = v.entrywise_fails();
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["implied"] = c.implied;
    cj["holds"] = c.holds;
    cj["margin"] = number(c.margin);
    checks.push_back(cj);
  }
  j["sub_checks"] = checks;
  j["witness"] = hex64(v.witness);
  return j;
}

Json to_json(const FuzzSummary& s) {
  Json j;
  j["ineq_id"] = s.ineq_id;
  j["trials"] = s.trials;
  j["failures"] = s.failures;
  j["worst_margin"] = number(s.worst_margin);
  j["worst_seed"] = s.trials ? Json(hex64(s.worst_seed)) : Json(nullptr);
  return j;
}

Json to_json(const ReproReport& r) {
  Json j;
  j["example_id"] = r.example_id;
  j["pass"] = r.pass;
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json ij;
    ij["name"] = item.name;
    ij["computed"] = number(item.computed);
    ij["expected"] = number(item.expected);
    ij["tolerance"] = number(item.tolerance);
    ij["pass"] = item.pass;
    items.push_back(ij);
  }
  j["items"] = items;
  return j;
}

Json to_json(const PropertyReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["pass"] = r.pass;
  Json results = Json::array();
  for (const auto& p : r.results) {
    Json pj;
    pj["name"] = p.name;
    pj["trials"] = p.trials;
    pj["failures"] = p.failures;
    pj["worst_margin"] = number(p.worst_margin);
    pj["pass"] = p.pass;
    results.push_back(pj);
  }
  j["results"] = results;
  return j;
}

std::string dump(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << '\n';
  return out.str();
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(out, j, 0);
  return out.str();
}

}  // namespace sspread

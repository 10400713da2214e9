#include "curveode/io.hpp"

#include <json.hpp>

#include "curveode/error.hpp"

namespace curveode {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coeff_array(const std::vector<Rational>& coeffs) {
  ordered_json arr = ordered_json::array();
  for (const Rational& c : coeffs) arr.push_back(to_string(c));
  return arr;
}

ordered_json series_object(long ord, const TruncatedSeries& body,
                           bool e_transform) {
  ordered_json j;
  j["ord"] = ord;
  j["truncation"] = body.truncation();
  if (body.exact()) j["exact"] = true;
  if (e_transform) j["e_transform"] = true;
  j["coeffs"] = coeff_array(body.coeffs());
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::config_error, std::string("invalid JSON: ") + e.what());
  }
}

long get_integer(const ordered_json& j, const std::string& key, long fallback,
                 bool required) {
  if (!j.contains(key)) {
    if (required) fail(errc::config_error, "missing field '" + key + "'");
    return fallback;
  }
  if (!j[key].is_number_integer()) {
    fail(errc::config_error, "field '" + key + "' must be an integer");
  }
  return j[key].get<long>();
}

std::vector<Rational> get_coeffs(const ordered_json& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
    fail(errc::config_error, "missing coefficient array 'coeffs'");
  }
  std::vector<Rational> out;
  out.reserve(j["coeffs"].size());
  for (const auto& item : j["coeffs"]) {
    if (!item.is_string()) {
      fail(errc::config_error,
           "coefficients must be rational strings like \"p/q\"");
    }
    out.push_back(parse_rational(item.get<std::string>()));
  }
  return out;
}

TruncatedSeries body_from_json(const ordered_json& j) {
  std::vector<Rational> coeffs = get_coeffs(j);
  bool exact = j.contains("exact") && j["exact"].is_boolean() &&
               j["exact"].get<bool>();
  if (exact) return TruncatedSeries::polynomial(std::move(coeffs));
  long trunc = get_integer(j, "truncation",
                           static_cast<long>(coeffs.size()) - 1, false);
  return TruncatedSeries(std::move(coeffs), trunc, false);
}

}  // namespace

std::string to_json(const TruncatedSeries& s) {
  return dump(series_object(0, s, false));
}

std::string to_json(const LaurentSeries& s) {
  return dump(series_object(s.ord(), s.body(), false));
}

std::string to_json(const SeriesFunction& w) {
  return dump(series_object(0, w.h, true));
}

std::string basis_to_json(long degree, const std::vector<SeriesFunction>& basis,
                          const std::string& note) {
  ordered_json j;
  j["degree"] = degree;
  if (!note.empty()) j["note"] = note;
  ordered_json arr = ordered_json::array();
  for (const SeriesFunction& w : basis) arr.push_back(series_object(0, w.h, true));
  j["basis"] = arr;
  return dump(j);
}

std::string report_to_json(const VerifyReport& report) {
  ordered_json j;
  j["n_max"] = report.n_max;
  j["truncation"] = report.truncation;
  j["all_pass"] = report.all_pass();
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    checks.push_back(item);
  }
  j["checks"] = checks;
  return dump(j);
}

std::string table_to_json(const SampleTable& table) {
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (const SampleRow& r : table.rows) {
    ordered_json row;
    row["xi"] = r.xi;
    row["value"] = r.value;
    if (r.tail_reliable) {
      row["tail_bound"] = r.tail_bound;
    } else {
      row["tail_bound"] = nullptr;
    }
    row["tail_reliable"] = r.tail_reliable;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return dump(j);
}

std::string error_to_json(const std::string& kind, const std::string& detail) {
  ordered_json j;
  j["error"] = kind;
  j["detail"] = detail;
  return dump(j);
}

LaurentSeries laurent_from_json(const std::string& text) {
  ordered_json j = parse(text);
  long ord = get_integer(j, "ord", 0, false);
  return LaurentSeries(ord, body_from_json(j));
}

SeriesFunction function_from_json(const std::string& text) {
  ordered_json j = parse(text);
  long ord = get_integer(j, "ord", 0, false);
  if (ord < 0) {
    fail(errc::config_error,
         "a function model cannot have negative order " + std::to_string(ord));
  }
  TruncatedSeries h = body_from_json(j);
  if (ord > 0) h = shift_up(h, ord);
  return {h};
}

CurveChart chart_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.contains("F") || !j["F"].is_string()) {
    fail(errc::invalid_chart, "chart needs a string field 'F'");
  }
  if (!j.contains("u0") || !j["u0"].is_string()) {
    fail(errc::invalid_chart, "chart needs a string field 'u0'");
  }
  std::map<std::string, std::string> coords;
  if (j.contains("coords")) {
    if (!j["coords"].is_object()) {
      fail(errc::invalid_chart, "chart field 'coords' must be an object");
    }
    for (const auto& [name, value] : j["coords"].items()) {
      if (!value.is_string()) {
        fail(errc::invalid_chart,
             "coordinate '" + name + "' must be an expression string");
      }
      coords.emplace(name, value.get<std::string>());
    }
  }
  return make_chart(j["F"].get<std::string>(), j["u0"].get<std::string>(),
                    coords);
}

namespace {

std::string coeff_csv(long start, const std::vector<Rational>& coeffs) {
  std::string out = "k,coefficient\n";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    out += std::to_string(start + static_cast<long>(i));
    out += ',';
    out += to_string(coeffs[i]);
    out += '\n';
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const LaurentSeries& s) {
  return coeff_csv(s.ord(), s.body().coeffs());
}

std::string to_csv(const TruncatedSeries& s) { return coeff_csv(0, s.coeffs()); }

std::string to_csv(const SeriesFunction& w) { return coeff_csv(0, w.h.coeffs()); }

std::string report_to_csv(const VerifyReport& report) {
  std::string out = "name,pass,detail\n";
  for (const CheckResult& c : report.checks) {
    out += c.name;
    out += ',';
    out += c.pass ? "true" : "false";
    out += ',';
    out += csv_quote(c.detail);
    out += '\n';
  }
  return out;
}

}  // namespace curveode

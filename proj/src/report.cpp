// Copyright 2026 The gramdim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gramdim/report.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gramdim/gram_space.hpp"
#include "gramdim/lift_iso.hpp"
#include "gramdim/selftest.hpp"
#include "gramdim/sos_cert.hpp"
#include "gramdim/spectra_dim.hpp"

namespace gramdim {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ < text_.size()) unexpected();
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void unexpected() {
    const char c = peek();
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (c == '/' || c == '%' || c == '!' || c == '=' || c == '<' || c == '>') {
      throw ParseError(std::string("unsupported operator '") + c + "'", pos_);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'x' || c == 'X' || c == '(';
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (starts_factor(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ < text_.size() && text_[pos_] == '.')) {
      throw ParseError("exponent must be a nonnegative integer", start);
    }
    if (pos_ - start > 4) throw ParseError("exponent too large", start);
    return gramdim::power(base, std::stoi(std::string(text_.substr(start, pos_ - start))));
  }

  Polynomial primary() {
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_++;
      Polynomial inner = expression();
      if (peek() != ')') throw ParseError("unbalanced parenthesis", open);
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return Polynomial::monomial(1, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Polynomial::constant(number());
    unexpected();
  }

  Rational number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
    } else {
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        digits();
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t probe = pos_ + 1;
        if (probe < text_.size() && (text_[probe] == '+' || text_[probe] == '-')) ++probe;
        if (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe]))) {
          pos_ = probe;
          digits();
        }
      }
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const InvalidInput& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool looks_like_expression(std::string_view text) {
  for (char c : text) {
    if (c == 'x' || c == 'X' || c == '(' || c == '^' || c == '*') return true;
  }
  return false;
}

}  // namespace

Polynomial parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

Polynomial parse_coefficient_list(std::string_view text) {
  // Fields are separated by commas when there are any, by whitespace
  // otherwise; one pair of enclosing brackets is allowed.
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  std::size_t end = text.find_last_not_of(" \t\r\n");
  if (begin == std::string_view::npos) throw ParseError("empty coefficient list", 0);
  ++end;
  if (text[begin] == '[') {
    if (text[end - 1] != ']') throw ParseError("unbalanced bracket", begin);
    ++begin;
    --end;
  }
  const bool commas = text.substr(begin, end - begin).find(',') != std::string_view::npos;
  auto blank = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };

  std::vector<Rational> coeffs;
  std::size_t pos = begin;
  while (pos <= end) {
    std::size_t stop = pos;
    if (commas) {
      while (stop < end && text[stop] != ',') ++stop;
    } else {
      while (pos < end && blank(text[pos])) ++pos;
      if (pos == end) break;
      stop = pos;
      while (stop < end && !blank(text[stop])) ++stop;
    }
    std::size_t first = pos;
    std::size_t last = stop;
    while (first < last && blank(text[first])) ++first;
    while (last > first && blank(text[last - 1])) --last;
    if (first == last) throw ParseError("empty coefficient", first);
    try {
      coeffs.push_back(parse_rational(text.substr(first, last - first)));
    } catch (const InvalidInput& e) {
      throw ParseError(e.what(), first);
    }
    pos = stop + 1;
  }
  if (coeffs.empty()) throw ParseError("empty coefficient list", 0);
  return normalize(coeffs);
}

Polynomial parse_polynomial(std::string_view text) {
  if (looks_like_expression(text)) return parse_expression(text);
  if (text.find(',') != std::string_view::npos) return parse_coefficient_list(text);
  try {
    return parse_coefficient_list(text);
  } catch (const InvalidInput&) {
    return parse_expression(text);
  }
}

std::optional<Command> parse_command(std::string_view name) {
  if (name == "analyze") return Command::kAnalyze;
  if (name == "sos") return Command::kSos;
  if (name == "dim") return Command::kDim;
  if (name == "lift") return Command::kLift;
  if (name == "selftest") return Command::kSelftest;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON emission: doubles always carry 17 significant digits.

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0) return "0";  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        emit(value, indent + 2, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool scalar = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
      if (scalar) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          emit(j[i], indent, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(j[i], indent + 2, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string dump_json(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

std::string fmt_double(double v) {
  std::ostringstream s;
  s.precision(6);
  s << (v == 0 ? 0.0 : v);
  return s.str();
}

Json matrix_json(const SymMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_text(const SymMatrix& m) {
  std::ostringstream s;
  s.precision(6);
  for (int i = 0; i < m.size(); ++i) {
    s << "    [";
    for (int j = 0; j < m.size(); ++j) {
      if (j) s << ", ";
      s << m(i, j);
    }
    s << "]\n";
  }
  return s.str();
}

Json doubles_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

std::string doubles_text(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt_double(v[i]);
  }
  return s + "]";
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string dimension_status(const DimensionReport& r) {
  if (r.status == DimensionStatus::kUndetermined) return "undetermined";
  return r.agreement ? "ok" : "disagreement";
}

Json real_roots_json(const DeflationReport& deflation) {
  Json roots = Json::array();
  for (const auto& [r, e] : deflation.real_roots) {
    roots.push_back(Json{{"root", r}, {"half_multiplicity", e}});
  }
  return roots;
}

Json dimension_json(const Polynomial& f, const DimensionReport& r) {
  Json j;
  j["input"] = to_string(f);
  j["degree"] = f.degree();
  j["d"] = r.d;
  j["e"] = r.e;
  j["real_roots"] = real_roots_json(r.deflation);
  j["predicted_dim"] = r.predicted;
  j["computed_dim"] = optional_int(r.computed);
  j["agreement"] = r.agreement;
  j["witness_rank"] = r.witness_rank;
  j["sos_residual"] = r.sos_residual;
  j["status"] = dimension_status(r);
  return j;
}

std::string dimension_text(const Polynomial& f, const DimensionReport& r) {
  std::ostringstream s;
  s << "polynomial:     " << to_string(f) << "\n";
  s << "degree:         " << f.degree() << " (d = " << r.d << ")\n";
  s << "excess e:       " << r.e << "\n";
  s << "real roots:    ";
  if (r.deflation.real_roots.empty()) s << " none";
  for (const auto& [root, e] : r.deflation.real_roots) s << " " << fmt_double(root) << " (2e=" << 2 * e << ")";
  s << "\n";
  s << "predicted dim:  " << r.predicted << "\n";
  s << "computed dim:   " << (r.computed ? std::to_string(*r.computed) : "undetermined") << "\n";
  s << "witness rank:   " << r.witness_rank << " after " << r.sweeps << " sweeps\n";
  s << "sos residual:   " << fmt_double(r.sos_residual) << "\n";
  s << "agreement:      " << (r.agreement ? "yes" : "no") << "\n";
  return s.str();
}

DimensionOptions options_for(const AnalysisRequest& request) {
  DimensionOptions options;
  if (request.rank_tol) options.rank_tol = *request.rank_tol;
  return options;
}

RunResult run_dimension(const AnalysisRequest& request, const Polynomial& f, bool analyze) {
  const DimensionReport r = verify_dimension(f, options_for(request));
  RunResult result;
  result.exit_code = r.agreement ? kExitOk : kExitDisagreement;
  if (!analyze) {
    result.out = request.output_mode == OutputMode::kJson ? dump_json(dimension_json(f, r)) : dimension_text(f, r);
    return result;
  }
  const SosCertificate cert = two_squares(f);
  std::optional<int> brute;
  if (r.d <= 4) brute = brute_force_dimension(f, request.samples);
  if (request.output_mode == OutputMode::kJson) {
    Json j = dimension_json(f, r);
    j["nonnegative"] = true;
    j["brute_force_dim"] = optional_int(brute);
    j["positive_part"] = doubles_json(r.deflation.positive_part);
    j["sos_p"] = doubles_json(cert.p);
    j["sos_q"] = doubles_json(cert.q);
    result.out = dump_json(j);
  } else {
    std::ostringstream s;
    s << "nonnegative:    yes\n" << dimension_text(f, r);
    s << "sampled dim:    " << (brute ? std::to_string(*brute) : "skipped (d > 4)") << "\n";
    s << "positive part:  " << doubles_text(r.deflation.positive_part) << "\n";
    s << "sos p:          " << doubles_text(cert.p) << "\n";
    s << "sos q:          " << doubles_text(cert.q) << "\n";
    result.out = s.str();
  }
  return result;
}

RunResult run_sos(const AnalysisRequest& request, const Polynomial& f) {
  const SosCertificate cert = two_squares(f);
  RunResult result;
  if (request.output_mode == OutputMode::kJson) {
    Json j;
    j["input"] = to_string(f);
    j["degree"] = f.degree();
    j["d"] = f.degree() / 2;
    j["p"] = doubles_json(cert.p);
    j["q"] = doubles_json(cert.q);
    j["sos_residual"] = cert.residual;
    j["gram_point"] = matrix_json(cert.gram_point);
    j["status"] = "ok";
    result.out = dump_json(j);
  } else {
    std::ostringstream s;
    s << "polynomial:     " << to_string(f) << "\n";
    s << "p:              " << doubles_text(cert.p) << "\n";
    s << "q:              " << doubles_text(cert.q) << "\n";
    s << "residual:       " << fmt_double(cert.residual) << "\n";
    s << "gram point:\n" << matrix_text(cert.gram_point);
    result.out = s.str();
  }
  return result;
}

RunResult run_lift(const AnalysisRequest& request, const Polynomial& f) {
  if (!request.lift_params) throw InvalidInput("lift needs --lift a b");
  const auto& [a, b] = *request.lift_params;
  const IsomorphismReport r = verify_isomorphism(f, a, b);
  RunResult result;
  result.exit_code = r.ok() ? kExitOk : kExitDisagreement;
  if (request.output_mode == OutputMode::kJson) {
    Json j;
    j["input"] = to_string(f);
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["lifted"] = to_string(r.lifted);
    Json coeffs = Json::array();
    for (const auto& c : r.lifted.coeffs()) coeffs.push_back(to_string(c));
    j["lifted_coeffs"] = std::move(coeffs);
    j["lifted_point"] = matrix_json(r.lifted_point);
    j["coefficient_error"] = r.coefficient_error;
    j["coefficient_identity"] = r.coefficient_identity;
    j["psd_preserved"] = r.psd_preserved;
    j["induced_rank"] = r.induced_rank;
    j["expected_rank"] = r.expected_rank;
    j["injective"] = r.injective;
    j["source_dim"] = optional_int(r.source_dim);
    j["target_dim"] = optional_int(r.target_dim);
    j["dimension_transport"] = r.dimension_transport;
    j["status"] = r.ok() ? "ok" : "disagreement";
    result.out = dump_json(j);
  } else {
    std::ostringstream s;
    s << "polynomial:           " << to_string(f) << "\n";
    s << "lift factor:          (" << to_string(a) << ")*x + (" << to_string(b) << "), squared\n";
    s << "lifted polynomial:    " << to_string(r.lifted) << "\n";
    s << "lifted gram point:\n" << matrix_text(r.lifted_point);
    s << "coefficient identity: " << (r.coefficient_identity ? "pass" : "FAIL") << " (max rel err "
      << fmt_double(r.coefficient_error) << ")\n";
    s << "psd preserved:        " << (r.psd_preserved ? "pass" : "FAIL") << "\n";
    s << "injective:            " << (r.injective ? "pass" : "FAIL") << " (rank " << r.induced_rank << " of "
      << r.expected_rank << ")\n";
    s << "dimension transport:  " << (r.dimension_transport ? "pass" : "FAIL") << " ("
      << (r.source_dim ? std::to_string(*r.source_dim) : "?") << " -> "
      << (r.target_dim ? std::to_string(*r.target_dim) : "?") << ")\n";
    result.out = s.str();
  }
  return result;
}

RunResult run_selftest_command(const AnalysisRequest& request) {
  const auto criteria = run_selftest();
  const bool all = std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
  RunResult result;
  result.exit_code = all ? kExitOk : kExitDisagreement;
  if (request.output_mode == OutputMode::kJson) {
    Json list = Json::array();
    for (const auto& c : criteria) {
      list.push_back(Json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    result.out = dump_json(Json{{"criteria", std::move(list)}, {"passed", all}});
  } else {
    std::ostringstream s;
    for (const auto& c : criteria) {
      s << (c.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << c.detail << "\n";
    }
    s << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    result.out = s.str();
  }
  return result;
}

RunResult diagnostic(const AnalysisRequest& request, std::string_view status, const std::string& message,
                     int exit_code) {
  RunResult result;
  result.exit_code = exit_code;
  if (request.output_mode == OutputMode::kJson) {
    Json j;
    j["input"] = request.input;
    j["status"] = status;
    j["error"] = message;
    result.out = dump_json(j);
  } else {
    result.err = "error (" + std::string(status) + "): " + message + "\n";
  }
  return result;
}

}  // namespace

RunResult run(const AnalysisRequest& request) {
  try {
    if (request.command == Command::kSelftest) return run_selftest_command(request);
    if (request.lift_params && request.command != Command::kLift) {
      throw InvalidInput("--lift is only valid with the lift command");
    }
    const Polynomial f =
        request.coefficient_list ? parse_coefficient_list(request.input) : parse_polynomial(request.input);
    if (f.is_zero()) throw InvalidInput("the zero polynomial has no Gram spectrahedron");
    switch (request.command) {
      case Command::kAnalyze:
        return run_dimension(request, f, /*analyze=*/true);
      case Command::kDim:
        return run_dimension(request, f, /*analyze=*/false);
      case Command::kSos:
        return run_sos(request, f);
      case Command::kLift:
        return run_lift(request, f);
      case Command::kSelftest:
        break;
    }
    throw InvalidInput("unknown command");
  } catch (const NotNonnegative& e) {
    return diagnostic(request, "not_nonnegative", e.what(), kExitInputError);
  } catch (const InvalidInput& e) {
    return diagnostic(request, "invalid_input", e.what(), kExitInputError);
  } catch (const NumericalFailure& e) {
    return diagnostic(request, "numerical_failure", e.what(), kExitDisagreement);
  }
}

}  // namespace gramdim

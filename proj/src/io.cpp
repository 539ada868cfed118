#include "logcv/io.hpp"

#include <istream>
#include <sstream>

namespace logcv::io {

Json to_json(const Scalar& x) { return x.str(); }

Json to_json(const Sequence& s) {
  Json a = Json::array();
  for (const auto& x : s.entries()) a.push_back(to_json(x));
  return a;
}

Json to_json(const DepthResult& d) {
  Json j{{"depth", d.depth}, {"saturated", d.saturated}};
  if (d.witness_index) j["witness"] = {{"index", *d.witness_index}, {"value", to_json(*d.witness_value)}};
  return j;
}

Json to_json(const Certificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"m", c.m}};
  switch (c.kind) {
    case CertKind::NotMLogConcave:
      j["witness"] = {{"index", *c.witness_index}, {"value", to_json(*c.witness_value)}};
      break;
    case CertKind::FixedPoint:
      j["lambda"] = to_json(*c.lambda);
      j["base"] = c.base;
      j["semantics"] = c.base == 0 ? "original" : "cycle";
      break;
    case CertKind::RFactor:
      j["r"] = c.r_infinite ? Json("inf") : to_json(*c.r);
      break;
    case CertKind::Unknown:
      j["budget_exhausted"] = c.budget_exhausted;
      break;
  }
  Json trace = Json::array();
  for (const auto& t : c.trace) {
    Json row{{"m", t.m}, {"min_sign", t.min_sign}};
    if (t.r_infinite) row["r_sup"] = "inf";
    else if (t.r_sup) row["r_sup"] = to_json(*t.r_sup);
    trace.push_back(std::move(row));
  }
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const RecurrenceAnsatz& r) {
  Json coeffs = Json::array();
  for (const auto& p : r.coeffs) {
    Json poly = Json::array();
    for (const auto& c : p) poly.push_back(to_json(c));
    coeffs.push_back(std::move(poly));
  }
  return {{"order", r.order}, {"coeff_degree", r.coeff_degree}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const SweepRow& row) {
  Json min_lambda = Json::object();
  for (std::size_t i = 0; i < row.min_lambda.size(); ++i)
    min_lambda[std::to_string(i + 1)] = row.min_lambda[i] ? Json(*row.min_lambda[i]) : Json(nullptr);
  min_lambda["inf"] = row.inf_lambda ? Json(*row.inf_lambda) : Json(nullptr);
  Json certs = Json::object();
  for (const auto& [lambda, cert] : row.inf_certificates) certs[std::to_string(lambda)] = to_json(cert);
  return {{"poly", to_json(row.poly)},
          {"min_lambda", std::move(min_lambda)},
          {"inf_certificates", std::move(certs)},
          {"findings", row.findings}};
}

Json to_json(const ProbeRow& row) {
  Json j{{"n", row.n}};
  if (row.depth) j["depth"] = *row.depth;
  j["certificate"] = to_json(row.cert);
  return j;
}

std::string to_csv(const Sequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i].str();
  }
  return out;
}

std::string table_csv(const std::vector<SweepRow>& rows, int m_max) {
  std::ostringstream out;
  out << "poly";
  for (int m = 1; m <= m_max; ++m) out << ',' << m;
  out << ",inf\n";
  for (const auto& row : rows) {
    out << '"' << to_csv(row.poly) << '"';
    for (const auto& x : row.min_lambda) {
      out << ',';
      if (x) out << *x;
    }
    out << ',';
    if (row.inf_lambda) out << *row.inf_lambda;
    out << '\n';
  }
  return out.str();
}

Sequence read_sequence(std::string_view text, SeqKind kind) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw ParseError("empty sequence");
  if (text[start] != '{' && text[start] != '[') {
    std::string line(text.substr(start));
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    return Sequence::parse_csv(line, kind);
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bad JSON sequence: ") + e.what());
  }
  const Json& terms = j.is_object() ? j.at("terms") : j;
  if (!terms.is_array() || terms.empty()) throw ParseError("expected a non-empty array of scalars");
  std::vector<Scalar> v;
  for (const auto& t : terms) v.push_back(Scalar::parse(t.is_string() ? t.get<std::string>() : t.dump()));
  return Sequence(std::move(v), kind);
}

std::vector<Sequence> read_sequence_list(std::istream& in) {
  std::vector<Sequence> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(read_sequence(line));
  }
  return out;
}

}  // namespace logcv::io

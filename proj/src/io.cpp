#include "mabuchi/io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "mabuchi/error.hpp"

namespace mabuchi {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

std::string schema(const char* name) { return std::string("mabuchi.") + name + "/" + std::to_string(kSchemaVersion); }

std::string decimal(const BigRational& r) { return r.to_decimal(kDecimalDigits); }

Json rational_list(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Table {
 public:
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows_) os << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

Json manifold_json(const AdmissibleManifold& m) {
  Json j;
  j["description"] = m.describe();
  if (m.pn_tuple()) {
    const PnTuple& t = *m.pn_tuple();
    j["pn_bundle"] = {{"n", t.n}, {"k", t.k}, {"d0", t.d0}, {"d_inf", t.d_inf}};
  }
  j["d0"] = m.d0();
  j["d_inf"] = m.d_inf();
  Json factors = Json::array();
  for (std::size_t i = 0; i < m.factors().size(); ++i) {
    const BaseFactor& f = m.factors()[i];
    factors.push_back({{"d", f.dim}, {"epsilon", f.epsilon}, {"s", f.einstein.str()}, {"x", m.x(i).str()},
                       {"lambda", m.lambda(i).str()}});
  }
  j["factors"] = factors;
  j["dimension"] = m.total_dim();
  j["c"] = m.c().str();
  j["w"] = m.w().str();
  return j;
}

std::vector<BigRational> sample_points(unsigned samples) {
  std::vector<BigRational> xs;
  if (samples == 0) return xs;
  if (samples == 1) return {BigRational(0)};
  for (unsigned i = 0; i < samples; ++i)
    xs.push_back(BigRational(-1) + BigRational(static_cast<long>(2 * i), static_cast<long>(samples - 1)));
  return xs;
}

unsigned read_unsigned(const Json& j, const char* key, const char* where) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string(where) + ": missing \"" + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw Error(ErrorCode::ParseError, std::string(where) + ": \"" + key + "\" must be a non-negative integer");
  return v.get<unsigned>();
}

BigRational read_rational(const Json& v, const char* where) {
  if (v.is_string()) return BigRational::parse(v.get<std::string>());
  if (v.is_number_integer()) return BigRational(v.get<long>());
  throw Error(ErrorCode::ParseError, std::string(where) + ": rationals must be \"p/q\" strings or integers");
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorCode::ParseError, "unknown format \"" + std::string(name) + "\" (expected table, csv or json)");
}

PnTuple parse_pn_tuple(std::string_view text) {
  unsigned values[4] = {0, 0, 0, 0};
  std::size_t field = 0;
  const char* it = text.data();
  const char* end = text.data() + text.size();
  while (field < 4) {
    const auto [ptr, ec] = std::from_chars(it, end, values[field]);
    if (ec != std::errc() || ptr == it) break;
    ++field;
    it = ptr;
    if (field < 4) {
      if (it == end || *it != ',') break;
      ++it;
    }
  }
  if (field != 4 || it != end)
    throw Error(ErrorCode::ParseError, "expected n,k,d0,d_inf with non-negative integers, got \"" + std::string(text) + "\"");
  return {values[0], values[1], values[2], values[3]};
}

AdmissibleManifold parse_manifest(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "manifest must be a JSON object");

  if (j.contains("pn_bundle")) {
    const Json& pn = j.at("pn_bundle");
    if (!pn.is_object()) throw Error(ErrorCode::ParseError, "\"pn_bundle\" must be an object");
    return AdmissibleManifold::from_pn_bundle({read_unsigned(pn, "n", "pn_bundle"), read_unsigned(pn, "k", "pn_bundle"),
                                               read_unsigned(pn, "d0", "pn_bundle"),
                                               read_unsigned(pn, "d_inf", "pn_bundle")});
  }

  const unsigned d0 = read_unsigned(j, "d0", "manifest");
  const unsigned d_inf = read_unsigned(j, "d_inf", "manifest");
  std::vector<BaseFactor> factors;
  if (j.contains("factors")) {
    const Json& list = j.at("factors");
    if (!list.is_array()) throw Error(ErrorCode::ParseError, "\"factors\" must be an array");
    for (const Json& f : list) {
      if (!f.is_object()) throw Error(ErrorCode::ParseError, "each factor must be an object");
      BaseFactor bf;
      bf.dim = read_unsigned(f, "d", "factor");
      if (!f.contains("epsilon") || !f.at("epsilon").is_number_integer())
        throw Error(ErrorCode::ParseError, "factor: \"epsilon\" must be +1 or -1");
      bf.epsilon = f.at("epsilon").get<int>();
      if (!f.contains("s")) throw Error(ErrorCode::ParseError, "factor: missing \"s\"");
      bf.einstein = read_rational(f.at("s"), "factor");
      factors.push_back(std::move(bf));
    }
  }
  return AdmissibleManifold(d0, d_inf, std::move(factors));
}

std::string render_classification(const AdmissibleManifold& m, const ClassificationReport& r, Format format) {
  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = schema("classify");
      j["manifold"] = manifold_json(m);
      j["characteristic_polynomial"] = rational_list(m.characteristic_polynomial());
      j["moments"] = {{"b0", r.moments.b0.str()}, {"b1", r.moments.b1.str()}, {"b2", r.moments.b2.str()}};
      j["w"] = r.w.str();
      j["futaki"] = r.futaki.str();
      j["alpha"] = r.projection.alpha.str();
      j["beta"] = r.projection.beta.str();
      j["M_X"] = r.mabuchi_constant.str();
      j["M_X_form"] = r.mabuchi_form;
      j["forms_agree"] = r.forms_agree;
      j["ke_exists"] = r.ke_exists;
      j["mabuchi_soliton"] = r.mabuchi_soliton_exists;
      j["kr_soliton"] = r.kr_soliton_exists;
      j["notes"] = r.notes;
      j["decimal"] = {{"precision", kDecimalDigits},
                      {"presentation_only", true},
                      {"M_X", decimal(r.mabuchi_constant)},
                      {"futaki", decimal(r.futaki)}};
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "d0,d_inf,dimension,w,b0,b1,b2,futaki,alpha,beta,M_X,M_X_decimal,ke_exists,mabuchi_soliton\n";
      os << m.d0() << ',' << m.d_inf() << ',' << m.total_dim() << ',' << r.w << ',' << r.moments.b0 << ','
         << r.moments.b1 << ',' << r.moments.b2 << ',' << r.futaki << ',' << r.projection.alpha << ','
         << r.projection.beta << ',' << r.mabuchi_constant << ',' << decimal(r.mabuchi_constant) << ','
         << (r.ke_exists ? "true" : "false") << ',' << (r.mabuchi_soliton_exists ? "true" : "false") << '\n';
      return os.str();
    }
    case Format::Table: {
      Table t;
      t.row("manifold", m.describe());
      t.row("dimension", std::to_string(m.total_dim()));
      t.row("p(x)", m.characteristic_polynomial().str());
      t.row("w", r.w.str());
      t.row("b0, b1, b2", r.moments.b0.str() + ", " + r.moments.b1.str() + ", " + r.moments.b2.str());
      t.row("b1 - w b0", r.futaki.str());
      t.row("alpha, beta", r.projection.alpha.str() + ", " + r.projection.beta.str());
      t.row("M_X", r.mabuchi_constant.str() + "  (" + decimal(r.mabuchi_constant) + ")");
      t.row("Kahler-Einstein", yes_no(r.ke_exists));
      t.row("Mabuchi soliton", yes_no(r.mabuchi_soliton_exists));
      t.row("Kahler-Ricci soliton", yes_no(r.kr_soliton_exists));
      return t.str();
    }
  }
  return {};
}

std::string render_mabuchi_constant(const AdmissibleManifold& m, const BigRational& value, Format format) {
  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = schema("mconst");
      j["manifold"] = m.describe();
      j["M_X"] = value.str();
      j["decimal"] = {{"precision", kDecimalDigits}, {"presentation_only", true}, {"M_X", decimal(value)}};
      return dump(j);
    }
    case Format::Csv:
      return "M_X,M_X_decimal\n" + value.str() + "," + decimal(value) + "\n";
    case Format::Table:
      return value.str() + "  (" + decimal(value) + ")\n";
  }
  return {};
}

std::string render_scan(const ScanBounds& bounds, const ScanResult& scan, Format format, bool verbose) {
  std::size_t solitons = 0;
  for (const auto& v : scan.verdicts) solitons += v.computed_exists ? 1 : 0;

  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = schema("scan");
      j["bounds"] = {{"n_max", bounds.n_max}, {"k_max", bounds.k_max}, {"d0_max", bounds.d0_max},
                     {"d_inf_max", bounds.d_inf_max}};
      Json rows = Json::array();
      for (const auto& v : scan.verdicts) {
        rows.push_back({{"n", v.tuple.n},
                        {"k", v.tuple.k},
                        {"d0", v.tuple.d0},
                        {"d_inf", v.tuple.d_inf},
                        {"I", v.i.str()},
                        {"M_X", v.mabuchi_constant.str()},
                        {"M_X_decimal", decimal(v.mabuchi_constant)},
                        {"futaki", v.futaki.str()},
                        {"eq1", v.eq1_holds},
                        {"closed_form_exists", v.closed_form_exists},
                        {"exists", v.computed_exists}});
      }
      j["tuples"] = rows;
      j["summary"] = {{"fano_tuples", scan.verdicts.size()},
                      {"skipped_tuples", scan.skipped.size()},
                      {"soliton_tuples", solitons},
                      {"mismatches", 0},
                      {"unit_mabuchi_constant", 0}};
      if (verbose) {
        Json skipped = Json::array();
        for (const auto& s : scan.skipped)
          skipped.push_back({{"n", s.tuple.n}, {"k", s.tuple.k}, {"d0", s.tuple.d0}, {"d_inf", s.tuple.d_inf},
                             {"reason", s.reason}});
        j["skipped"] = skipped;
      }
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "n,k,d0,d_inf,I,M_X,M_X_decimal,exists\n";
      for (const auto& v : scan.verdicts)
        os << v.tuple.n << ',' << v.tuple.k << ',' << v.tuple.d0 << ',' << v.tuple.d_inf << ',' << v.i << ','
           << v.mabuchi_constant << ',' << decimal(v.mabuchi_constant) << ',' << (v.computed_exists ? "true" : "false")
           << '\n';
      return os.str();
    }
    case Format::Table: {
      std::ostringstream os;
      os << std::left << std::setw(14) << "(n,k,d0,dinf)" << std::setw(28) << "M_X" << std::setw(26) << "M_X decimal"
         << "soliton\n";
      for (const auto& v : scan.verdicts)
        os << std::left << std::setw(14) << v.tuple.str() << std::setw(28) << v.mabuchi_constant.str() << std::setw(26)
           << decimal(v.mabuchi_constant) << yes_no(v.computed_exists) << '\n';
      os << scan.verdicts.size() << " Fano tuples, " << solitons << " with a Mabuchi soliton, 0 mismatches\n";
      if (verbose)
        for (const auto& s : scan.skipped) os << "skipped " << s.tuple.str() << ": " << s.reason << '\n';
      return os.str();
    }
  }
  return {};
}

std::string render_profile(const AdmissibleManifold& m, const ProfileExport& e, Format format, unsigned samples) {
  const Profile& theta = *e.profile;
  const ProfileVerification& v = e.verification;
  if (format == Format::Csv) {
    if (samples == 0) samples = 101;
    std::ostringstream os;
    os << "x,theta\n";
    for (const auto& x : sample_points(samples)) os << decimal(x) << ',' << decimal(theta(x)) << '\n';
    return os.str();
  }
  if (format == Format::Json) {
    Json j;
    j["schema"] = schema("profile");
    j["manifold"] = manifold_json(m);
    Json weight = {{"kind", e.weight->kind()}};
    if (const auto* a = std::get_if<Weight::Affine>(&e.weight->variant())) {
      weight["alpha"] = a->alpha.str();
      weight["beta"] = a->beta.str();
    }
    if (auto poly = e.weight->as_polynomial()) weight["coefficients"] = rational_list(*poly);
    j["weight"] = weight;
    j["numerator"] = rational_list(theta.numerator());
    j["denominator"] = rational_list(theta.denominator());
    j["verification"] = {{"theta_minus_one", v.value_minus_one.str()},
                         {"theta_plus_one", v.value_plus_one.str()},
                         {"slope_minus_one", v.slope_minus_one.str()},
                         {"slope_plus_one", v.slope_plus_one.str()},
                         {"interior_numerator_roots", v.interior_numerator_roots},
                         {"denominator_nonvanishing", v.denominator_nonvanishing},
                         {"positive_interior", v.positive_interior},
                         {"ode_identity", e.ode_identity},
                         {"primitive_identity", e.primitive_identity},
                         {"passed", v.all_passed() && e.ode_identity && e.primitive_identity}};
    if (samples > 0) {
      Json rows = Json::array();
      for (const auto& x : sample_points(samples)) rows.push_back({{"x", x.str()}, {"theta", theta(x).str()}});
      j["samples"] = rows;
    }
    return dump(j);
  }
  Table t;
  t.row("manifold", m.describe());
  t.row("weight", e.weight->kind());
  t.row("Theta numerator", theta.numerator().str());
  t.row("Theta denominator", theta.denominator().str());
  t.row("Theta(-1), Theta(1)", v.value_minus_one.str() + ", " + v.value_plus_one.str());
  t.row("Theta'(-1), Theta'(1)", v.slope_minus_one.str() + ", " + v.slope_plus_one.str());
  t.row("interior roots", std::to_string(v.interior_numerator_roots));
  t.row("soliton ODE", yes_no(e.ode_identity));
  t.row("certified", yes_no(v.all_passed() && e.ode_identity && e.primitive_identity));
  return t.str();
}

std::string render_kr(const AdmissibleManifold& m, const KrSolution& s, const KrConfig& config, Format format,
                      unsigned samples) {
  const unsigned shown = config.digits;
  const std::string tolerance = "1e-" + std::to_string(config.tolerance_exponent);
  std::vector<std::pair<BigRational, Real>> table;
  if (samples > 0) {
    const KrProfile profile(m, s.tau);
    for (const auto& x : sample_points(samples)) table.emplace_back(x, profile(x));
  }

  if (format == Format::Json) {
    Json j;
    j["schema"] = schema("krs");
    j["manifold"] = manifold_json(m);
    j["precision"] = config.digits;
    j["tolerance"] = tolerance;
    j["tau"] = s.tau.to_string(shown);
    j["residual"] = s.residual.to_string(6);
    j["barycenter"] = s.barycenter.to_string(shown);
    j["w"] = m.w().str();
    j["bisection_steps"] = s.bisection_steps;
    j["newton_steps"] = s.newton_steps;
    if (!table.empty()) {
      Json rows = Json::array();
      for (const auto& [x, th] : table) rows.push_back({{"x", x.str()}, {"theta", th.to_string(30)}});
      j["samples"] = rows;
    }
    return dump(j);
  }
  if (format == Format::Csv) {
    std::ostringstream os;
    if (table.empty()) {
      os << "tau,residual,barycenter,precision\n"
         << s.tau.to_string(shown) << ',' << s.residual.to_string(6) << ',' << s.barycenter.to_string(shown) << ','
         << config.digits << '\n';
    } else {
      os << "x,theta\n";
      for (const auto& [x, th] : table) os << decimal(x) << ',' << th.to_string(30) << '\n';
    }
    return os.str();
  }
  Table t;
  t.row("manifold", m.describe());
  t.row("precision", std::to_string(config.digits) + " digits");
  t.row("tau*", s.tau.to_string(shown));
  t.row("|residual|", abs(s.residual).to_string(6) + "  (tolerance " + tolerance + ")");
  t.row("barycenter(tau*)", s.barycenter.to_string(30) + "  (w = " + m.w().str() + ")");
  t.row("iterations", std::to_string(s.bisection_steps) + " bisection + " + std::to_string(s.newton_steps) + " Newton");
  std::string out = t.str();
  for (const auto& [x, th] : table) out += "  " + decimal(x) + "  " + th.to_string(30) + "\n";
  return out;
}

}  // namespace mabuchi

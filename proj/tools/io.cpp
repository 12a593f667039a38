#include "io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace superkit::io {

Q parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw UsageError("empty number");
  try {
    if (s.find('/') != std::string::npos) {
      Q q(s);
      if (q.get_den() == 0) throw UsageError("zero denominator in '" + raw + "'");
      q.canonicalize();
      return q;
    }
    // decimal with optional exponent, read exactly
    std::size_t e = s.find_first_of("eE");
    std::string mant = s.substr(0, e);
    long exp10 = e == std::string::npos ? 0 : std::stol(s.substr(e + 1));
    bool neg = !mant.empty() && (mant[0] == '-' || mant[0] == '+');
    bool minus = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    std::size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("not a number: '" + raw + "'");
    mpz_class num(digits, 10), ten(10), pw;
    mpz_pow_ui(pw.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exp10)));
    Q q = exp10 >= 0 ? Q(num * pw) : Q(num, pw);
    q.canonicalize();
    return minus ? Q(-q) : q;
  } catch (const std::invalid_argument&) {
    throw UsageError("not a number: '" + raw + "'");
  }
}

int parse_twice_spin(const std::string& s) {
  Q t = 2 * parse_rational(s);
  t.canonicalize();
  if (t.get_den() != 1 || sgn(t) < 0) throw UsageError("spin must be a non-negative half-integer: '" + s + "'");
  return static_cast<int>(t.get_num().get_si());
}

namespace {

Q rational_of_json(const json& v) {
  if (v.is_array()) {
    if (v.size() != 2) throw UsageError("rational pair must be [num, den]");
    Q q(v[0].get<long>(), v[1].get<long>());
    if (v[1].get<long>() == 0) throw UsageError("zero denominator");
    q.canonicalize();
    return q;
  }
  if (v.is_number_integer()) return Q(v.get<long>());
  if (v.is_number()) return Q(v.get<double>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw UsageError("expected a number");
}

}  // namespace

ParsedMomentum parse_momentum(const std::string& s) {
  ParsedMomentum out;
  std::vector<Q> vals;
  std::string t = s;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  if (!t.empty() && t.front() == '[') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad momentum JSON: ") + e.what());
    }
    if (!j.is_array()) throw UsageError("momentum must be an array");
    for (auto& v : j) vals.push_back(rational_of_json(v));
  } else {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(parse_rational(item));
  }
  if (vals.size() != 4) throw UsageError("momentum needs 4 components");
  for (int k = 0; k < 4; ++k) {
    out.exact.p[k] = vals[k];
    out.numeric.p[k] = vals[k].get_d();
  }
  return out;
}

json to_json(const CQ& x) {
  return json::array({x.re.get_num().get_str(), x.re.get_den().get_str(), x.im.get_num().get_str(),
                      x.im.get_den().get_str()});
}

json to_json(const Multivector& m) {
  json c = json::object();
  for (int k = 0; k < kDimW; ++k)
    if (!m[k].is_zero()) c[Monomial(k).key()] = to_json(m[k]);
  return {{"coeffs", c}};
}

json to_json(const ledger::Snapshot& s) {
  json j = json::object();
  for (auto& [k, v] : s) j[k] = v;
  return j;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"status", c.pass ? "pass" : "fail"},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"max_error", c.max_error},
                      {"runtime_ms", c.runtime_ms}});
  return {{"suite", r.suite},     {"seed", r.seed},           {"tol", r.tol},
          {"passed", r.passed()}, {"max_error", r.max_error()}, {"checks", checks},
          {"ledger", to_json(r.ledger)}};
}

json to_json(const SpinDecomposition& d) {
  json j = json::object();
  for (auto& [t, m] : d) j[half_str(t)] = m;
  return j;
}

namespace {

template <class S>
json term(const typename Sc<S>::Mom& k, const S& a) {
  json t = json::array();
  if constexpr (std::is_same_v<S, CQ>) {
    // exact values as "num/den" strings
    t.push_back(a.re.get_str());
    t.push_back(a.im.get_str());
    for (int mu = 0; mu < 4; ++mu) t.push_back(k.p[mu].get_str());
  } else {
    t.push_back(a.real());
    t.push_back(a.imag());
    for (int mu = 0; mu < 4; ++mu) t.push_back(k.p[mu]);
  }
  t.push_back(1);
  return t;
}

}  // namespace

template <class S>
json to_json(const PlaneWaveFn<S>& f) {
  json j = json::array();
  for (auto& [k, a] : f.terms) j.push_back(term<S>(k, a));
  return j;
}

template <class S>
json to_json(const ChiralData<S>& c) {
  return {{"phi", to_json(c.phi)}, {"psi", json::array({to_json(c.psi[0]), to_json(c.psi[1])})}, {"F", to_json(c.F)}};
}

template <class S>
json to_json(const SuperFunction<S>& f) {
  json comps = json::object();
  for (int m = 0; m < kDimW; ++m) {
    auto c = f.component(m);
    if (!c.terms.empty()) comps[Monomial(m).key()] = to_json(c);
  }
  return {{"side", f.side == Side::Position ? "position" : "momentum"}, {"components", comps}};
}

template json to_json(const PlaneWaveFn<CQ>&);
template json to_json(const PlaneWaveFn<cd>&);
template json to_json(const ChiralData<CQ>&);
template json to_json(const ChiralData<cd>&);
template json to_json(const SuperFunction<CQ>&);
template json to_json(const SuperFunction<cd>&);

SuperFunction<CQ> superfunction_from_json(const json& j) {
  SuperFunction<CQ> f;
  std::string side = j.value("side", "position");
  if (side == "position")
    f.side = Side::Position;
  else if (side == "momentum")
    f.side = Side::Momentum;
  else
    throw UsageError("side must be 'position' or 'momentum'");
  if (!j.contains("components") || !j["components"].is_object()) throw UsageError("missing 'components' object");
  for (auto& [key, terms] : j["components"].items()) {
    int mask;
    try {
      mask = Monomial::from_key(key).mask;
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    for (auto& t : terms) {
      if (!t.is_array() || t.size() != 7) throw UsageError("term must be [re, im, p0, p1, p2, p3, sign]");
      int sign = t[6].get<int>();
      if (sign != 1 && sign != -1) throw UsageError("frequency sign must be +1 or -1");
      MomentumQ k;
      for (int mu = 0; mu < 4; ++mu) k.p[mu] = sign * rational_of_json(t[2 + mu]);
      f.add(k, mask, CQ(rational_of_json(t[0]), rational_of_json(t[1])));
    }
  }
  return f;
}

std::string text_table(const Report& r) {
  std::size_t w = 5;
  for (auto& c : r.checks) w = std::max(w, c.id.size());
  std::ostringstream s;
  s << "suite " << r.suite << "  seed " << r.seed << "  tol " << r.tol << "\n";
  s << std::left << std::setw(static_cast<int>(w) + 2) << "check" << std::setw(8) << "status" << std::setw(14)
    << "max_error" << std::setw(12) << "ms" << "detail\n";
  for (auto& c : r.checks) {
    std::ostringstream e;
    e << std::setprecision(3) << c.max_error;
    std::ostringstream t;
    t << std::fixed << std::setprecision(1) << c.runtime_ms;
    s << std::left << std::setw(static_cast<int>(w) + 2) << c.id << std::setw(8) << (c.pass ? "pass" : "FAIL")
      << std::setw(14) << e.str() << std::setw(12) << t.str() << c.lhs << " = " << c.rhs << "\n";
  }
  s << (r.passed() ? "all checks passed" : "some checks FAILED") << "\n";
  s << "ledger:\n";
  for (auto& [k, v] : r.ledger) s << "  " << std::setw(18) << k << v << "\n";
  return s.str();
}

}  // namespace superkit::io

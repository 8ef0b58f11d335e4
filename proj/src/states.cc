// Copyright 2026 The Dissension Authors
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

#include "dissension/states.h"

#include <cmath>
#include <functional>
#include <sstream>

#include "dissension/channels.h"
#include "json.hpp"

namespace dissension {

namespace {

using Params = std::map<std::string, double>;
using Builder = std::function<DensityOperator(const Params&)>;

CVector single(char c) {
  const double h = 1 / std::sqrt(2.0);
  CVector v(2);
  switch (c) {
    case '0': v << 1, 0; break;
    case '1': v << 0, 1; break;
    case '+': v << h, h; break;
    case '-': v << h, -h; break;
    default: throw std::invalid_argument(std::string("unknown ket symbol '") + c + "'");
  }
  return v;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); i++) {
    out.segment(i * b.size(), b.size()) = a[i] * b;
  }
  return out;
}

// Product ket from a string such as "00+".
CVector ket(const std::string& s) {
  CVector v = CVector::Ones(1);
  for (char c : s) {
    v = kron(v, single(c));
  }
  return v;
}

CMatrix proj(const CVector& v) {
  CVector u = v / v.norm();
  return u * u.adjoint();
}

DensityOperator make(const CMatrix& m) {
  auto n = static_cast<std::size_t>(std::log2(static_cast<double>(m.rows())) + 0.5);
  return DensityOperator(m, Register::canonical(n));
}

// psi+ = (|00>+|11>)/sqrt2 and phi+ = (|01>+|10>)/sqrt2, as named in the tables.
CVector psi_plus() { return (ket("00") + ket("11")) / std::sqrt(2.0); }
CVector psi_minus() { return (ket("00") - ket("11")) / std::sqrt(2.0); }
CVector phi_plus() { return (ket("01") + ket("10")) / std::sqrt(2.0); }

CVector ghz_ket(std::size_t n) {
  return (ket(std::string(n, '0')) + ket(std::string(n, '1'))) / std::sqrt(2.0);
}

CVector w_ket(std::size_t n) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  for (std::size_t i = 0; i < n; i++) {
    std::string s(n, '0');
    s[i] = '1';
    v += ket(s);
  }
  return v / std::sqrt(static_cast<double>(n));
}

CVector wc_ket() { return (ket("011") + ket("101") + ket("110")) / std::sqrt(3.0); }

CVector omega_ket() {
  return (kron(kron(ket("0"), psi_plus()), ket("0")) + kron(kron(ket("1"), psi_minus()), ket("1"))) / std::sqrt(2.0);
}

// Built on the canonical register with the distinguished qubit first, then
// moved so that qubit sits at `anchor`.
DensityOperator place_first_at(const CMatrix& m, std::size_t anchor) {
  auto n = static_cast<std::size_t>(std::log2(static_cast<double>(m.rows())) + 0.5);
  auto canon = Register::canonical(n).names();
  std::vector<std::string> names;
  names.push_back(canon[anchor]);
  for (std::size_t i = 0; i < n; i++) {
    if (i != anchor) names.push_back(canon[i]);
  }
  DensityOperator built(m, Register(names));
  return reorder(built, canon);
}

// The three biseparable flavours: pure |0>|g>, orthogonal mixture with |1>|g>,
// nonorthogonal mixture with |+>|g>, where g is GHZ on n-1 qubits.
CMatrix biseparable(std::size_t n, char flavour) {
  CVector g = ghz_ket(n - 1);
  CMatrix a = proj(kron(ket("0"), g));
  switch (flavour) {
    case 'p': return a;
    case 'c': return 0.5 * (a + proj(kron(ket("1"), g)));
    case 'q': return 0.5 * (a + proj(kron(ket("+"), g)));
  }
  throw std::logic_error("unknown biseparable flavour");
}

// The three-qubit mixed biseparables with Bell-type blocks.
CMatrix bisep3_mixed(char flavour) {
  if (flavour == 'c') {
    return 0.5 * (proj(kron(ket("0"), psi_plus())) + proj(kron(ket("1"), phi_plus())));
  }
  return 0.5 * (proj(kron(ket("+"), psi_plus())) + proj(kron(ket("0"), phi_plus())));
}

CMatrix identity(std::size_t n) {
  auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  return CMatrix::Identity(d, d) / static_cast<double>(d);
}

struct Registry {
  std::vector<CatalogEntry> entries;
  std::map<std::string, Builder> builders;

  void add(CatalogEntry e, Builder b) {
    builders.emplace(e.name, std::move(b));
    entries.push_back(std::move(e));
  }
};

const ParamSpec kP{"p", 0, 1, 1, "mixing weight"};

Registry make_registry() {
  Registry r;
  const char* kAxes = "xyzw";

  // Two qubits.
  r.add({"product2", 2, {}, "|++><++|"}, [](const Params&) { return make(proj(ket("++"))); });
  r.add({"classical2", 2, {}, "(|00><00| + |11><11|)/2"},
        [](const Params&) { return make(0.5 * (proj(ket("00")) + proj(ket("11")))); });
  r.add({"cq", 2, {}, "(|++><++| + |-0><-0|)/2"},
        [](const Params&) { return make(0.5 * (proj(ket("++")) + proj(ket("-0")))); });
  r.add({"qc", 2, {}, "(|++><++| + |0-><0-|)/2"},
        [](const Params&) { return make(0.5 * (proj(ket("++")) + proj(ket("0-")))); });
  r.add({"qq", 2, {}, "(|00><00| + |++><++|)/2"},
        [](const Params&) { return make(0.5 * (proj(ket("00")) + proj(ket("++")))); });
  r.add({"bell", 2, {}, "(|00> + |11>)/sqrt2"}, [](const Params&) { return make(proj(ghz_ket(2))); });
  r.add({"werner2", 2, {kP}, "(1-p) I/4 + p bell"},
        [](const Params& p) { return make((1 - p.at("p")) * identity(2) + p.at("p") * proj(ghz_ket(2))); });
  r.add({"generalized_werner",
         2,
         {kP,
          {"l", -1e6, 1e6, 0, "local parameter, real part"},
          {"l_im", -1e6, 1e6, 0, "local parameter, imaginary part"},
          {"k", -1e6, 1e6, 1, "nonlocal parameter"}},
         "(1-p) I/4 + p |psi_lk><psi_lk|"},
        [](const Params& p) { return generalized_werner(p.at("p"), Complex(p.at("l"), p.at("l_im")), p.at("k")); });

  // Three qubits.
  r.add({"product3", 3, {}, "|000>"}, [](const Params&) { return make(proj(ket("000"))); });
  for (const char* pat : {"ccc", "ccq", "cqc", "qcc", "qqc", "qcq", "cqq", "qqq"}) {
    std::string s = pat;
    r.add({s, 3, {}, "separable pattern " + s}, [s](const Params&) { return separable_pattern(s); });
  }
  r.add({"ghz3", 3, {}, "(|000> + |111>)/sqrt2"}, [](const Params&) { return ghz(3); });
  r.add({"w3", 3, {}, "(|100> + |010> + |001>)/sqrt3"}, [](const Params&) { return w_state(3); });
  r.add({"wc", 3, {}, "(|011> + |101> + |110>)/sqrt3"}, [](const Params&) { return make(proj(wc_ket())); });
  for (std::size_t a = 0; a < 3; a++) {
    std::string axis(1, kAxes[a]);
    r.add({"bisep3_" + axis, 3, {}, "|0>_" + axis + " (x) bell on the others"},
          [a](const Params&) { return place_first_at(biseparable(3, 'p'), a); });
  }
  for (std::size_t a = 0; a < 3; a++) {
    std::string axis(1, kAxes[a]);
    r.add({"bisep3c_" + axis, 3, {}, "(|0 psi+><..| + |1 phi+><..|)/2, first factor at " + axis},
          [a](const Params&) { return place_first_at(bisep3_mixed('c'), a); });
  }
  for (std::size_t a = 0; a < 3; a++) {
    std::string axis(1, kAxes[a]);
    r.add({"bisep3q_" + axis, 3, {}, "(|+ psi+><..| + |0 phi+><..|)/2, first factor at " + axis},
          [a](const Params&) { return place_first_at(bisep3_mixed('q'), a); });
  }
  r.add({"rho_m", 3, {}, "(|+ psi+><..| + |phi+ 0><..|)/2"}, [](const Params&) {
    return make(0.5 * (proj(kron(ket("+"), psi_plus())) + proj(kron(phi_plus(), ket("0")))));
  });
  r.add({"wg3", 3, {kP}, "(1-p) w3 + p ghz3"},
        [](const Params& p) { return make((1 - p.at("p")) * proj(w_ket(3)) + p.at("p") * proj(ghz_ket(3))); });
  r.add({"wwc3", 3, {kP}, "(1-p) wc + p w3"},
        [](const Params& p) { return make((1 - p.at("p")) * proj(wc_ket()) + p.at("p") * proj(w_ket(3))); });
  r.add({"werner3", 3, {kP}, "(1-p) I/8 + p ghz3"},
        [](const Params& p) { return make((1 - p.at("p")) * identity(3) + p.at("p") * proj(ghz_ket(3))); });

  // Four qubits.
  r.add({"product4", 4, {}, "|0000>"}, [](const Params&) { return make(proj(ket("0000"))); });
  for (int bits = 0; bits < 16; bits++) {
    std::string s;
    for (int i = 3; i >= 0; i--) {
      s += (bits >> i) & 1 ? 'q' : 'c';
    }
    r.add({s, 4, {}, "separable pattern " + s}, [s](const Params&) { return separable_pattern(s); });
  }
  r.add({"classical4", 4, {}, "(|0000><0000| + |1111><1111|)/2"},
        [](const Params&) { return make(0.5 * (proj(ket("0000")) + proj(ket("1111")))); });
  r.add({"ghz4", 4, {}, "(|0000> + |1111>)/sqrt2"}, [](const Params&) { return ghz(4); });
  r.add({"w4", 4, {}, "(|1000> + |0100> + |0010> + |0001>)/2"}, [](const Params&) { return w_state(4); });
  r.add({"omega", 4, {}, "(|0 psi+ 0> + |1 psi- 1>)/sqrt2"}, [](const Params&) { return make(proj(omega_ket())); });
  for (char flavour : {'p', 'c', 'q'}) {
    for (std::size_t a = 0; a < 4; a++) {
      std::string axis(1, kAxes[a]);
      std::string name = std::string("bisep4") + (flavour == 'p' ? "" : std::string(1, flavour)) + "_" + axis;
      std::string desc = flavour == 'p'   ? "|0>_" + axis + " (x) ghz3 on the others"
                         : flavour == 'c' ? "(|0 g3><..| + |1 g3><..|)/2, first factor at " + axis
                                          : "(|0 g3><..| + |+ g3><..|)/2, first factor at " + axis;
      r.add({name, 4, {}, desc}, [a, flavour](const Params&) { return place_first_at(biseparable(4, flavour), a); });
    }
  }
  r.add({"werner4", 4, {kP}, "(1-p) I/16 + p ghz4"},
        [](const Params& p) { return make((1 - p.at("p")) * identity(4) + p.at("p") * proj(ghz_ket(4))); });
  r.add({"wg4", 4, {kP}, "(1-p) w4 + p ghz4"},
        [](const Params& p) { return make((1 - p.at("p")) * proj(w_ket(4)) + p.at("p") * proj(ghz_ket(4))); });
  r.add({"omega_white", 4, {kP}, "(1-p) I/16 + p omega"},
        [](const Params& p) { return make((1 - p.at("p")) * identity(4) + p.at("p") * proj(omega_ket())); });
  r.add({"omega_colored", 4, {kP}, "(1-p) |0000><0000| + p omega"},
        [](const Params& p) { return make((1 - p.at("p")) * proj(ket("0000")) + p.at("p") * proj(omega_ket())); });
  r.add({"classical4_nonunital",
         4,
         {{"n", -1e6, 1e6, 1, "channel parameter of |n> = (|0> + n|1>)/sqrt(1+n^2)"}},
         "classical4 after the non-unital channel on x"},
        [](const Params& p) {
          auto cl = make(0.5 * (proj(ket("0000")) + proj(ket("1111"))));
          auto out = apply_local(cl, "x", nonunital_channel(p.at("n")));
          return DensityOperator(out.matrix(), out.reg());
        });
  return r;
}

const Registry& registry() {
  static const Registry r = make_registry();
  return r;
}

}  // namespace

StateRecipe StateRecipe::parse(const std::string& text) {
  StateRecipe r;
  auto colon = text.find(':');
  r.name = text.substr(0, colon);
  if (r.name.empty()) {
    throw ParameterError("empty state name");
  }
  if (colon == std::string::npos) {
    return r;
  }
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParameterError("expected key=value in '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty()) {
      throw ParameterError("parameter '" + key + "' is not a number: '" + value + "'");
    }
    r.params[key] = v;
  }
  return r;
}

std::string StateRecipe::to_string() const {
  std::ostringstream out;
  out << name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out << sep << k << '=' << v;
    sep = ',';
  }
  return out.str();
}

const std::vector<CatalogEntry>& catalog() { return registry().entries; }

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) {
      return e;
    }
  }
  throw UnknownStateError("unknown state '" + name + "'");
}

DensityOperator build(const StateRecipe& recipe) {
  const auto& entry = catalog_entry(recipe.name);
  Params p;
  for (const auto& spec : entry.params) {
    p[spec.name] = spec.default_value;
  }
  for (const auto& [k, v] : recipe.params) {
    auto it = p.find(k);
    if (it == p.end()) {
      throw ParameterError("state '" + recipe.name + "' has no parameter '" + k + "'");
    }
    it->second = v;
  }
  for (const auto& spec : entry.params) {
    double v = p.at(spec.name);
    if (!std::isfinite(v) || v < spec.lo || v > spec.hi) {
      std::ostringstream msg;
      msg << "parameter " << spec.name << "=" << v << " outside [" << spec.lo << ", " << spec.hi << "]";
      throw ParameterError(msg.str());
    }
  }
  return registry().builders.at(recipe.name)(p);
}

DensityOperator separable_pattern(const std::string& pattern) {
  if (pattern.size() < 2 || pattern.size() > kMaxQubits) {
    throw ParameterError("pattern length out of range");
  }
  std::string first, second;
  for (char c : pattern) {
    if (c == 'c') {
      first += '0';
      second += '1';
    } else if (c == 'q') {
      first += '+';
      second += '0';
    } else {
      throw ParameterError("pattern must consist of 'c' and 'q'");
    }
  }
  return make(0.5 * (proj(ket(first)) + proj(ket(second))));
}

DensityOperator ghz(std::size_t n) { return make(proj(ghz_ket(n))); }

DensityOperator w_state(std::size_t n) { return make(proj(w_ket(n))); }

DensityOperator generalized_werner(double p, Complex l, double k) {
  if (!(p >= 0 && p <= 1)) {
    throw ParameterError("p must be in [0,1]");
  }
  double nl = std::sqrt(1 + std::norm(l));
  CVector phi(2), perp(2);
  phi << 1.0 / nl, l / nl;
  perp << -std::conj(l) / nl, 1.0 / nl;
  CVector psi = (kron(phi, phi) + k * kron(perp, perp)) / std::sqrt(1 + k * k);
  return make((1 - p) * identity(2) + p * proj(psi));
}

double generalized_werner_separable_bound(double k) { return (1 + k * k) / (1 + 4 * k + k * k); }

DensityOperator random_pure(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(static_cast<Eigen::Index>(std::size_t{1} << n));
  for (Eigen::Index i = 0; i < v.size(); i++) {
    v[i] = Complex(g(rng), g(rng));
  }
  v /= v.norm();
  return DensityOperator::unchecked(v * v.adjoint(), Register::canonical(n));
}

DensityOperator random_mixed(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  CMatrix a(d, d);
  for (Eigen::Index i = 0; i < d; i++) {
    for (Eigen::Index j = 0; j < d; j++) {
      a(i, j) = Complex(g(rng), g(rng));
    }
  }
  CMatrix m = a * a.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()).eval() / 2.0;
  return DensityOperator::unchecked(std::move(m), Register::canonical(n));
}

CMatrix random_unitary_2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix a(2, 2);
  for (int i = 0; i < 2; i++) {
    for (int j = 0; j < 2; j++) {
      a(i, j) = Complex(g(rng), g(rng));
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; i++) {
    q.col(i) *= r(i, i) / std::abs(r(i, i));
  }
  return q;
}

std::string state_to_json(const DensityOperator& r) {
  nlohmann::json j;
  j["register"] = r.reg().names();
  auto re = nlohmann::json::array();
  auto im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < r.matrix().rows(); i++) {
    auto rr = nlohmann::json::array();
    auto ri = nlohmann::json::array();
    for (Eigen::Index k = 0; k < r.matrix().cols(); k++) {
      rr.push_back(r.matrix()(i, k).real());
      ri.push_back(r.matrix()(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  j["matrix_re"] = re;
  j["matrix_im"] = im;
  return j.dump(2);
}

DensityOperator state_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  auto names = j.at("register").get<std::vector<std::string>>();
  const auto& re = j.at("matrix_re");
  const auto d = static_cast<Eigen::Index>(re.size());
  CMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; i++) {
    if (static_cast<Eigen::Index>(re.at(i).size()) != d) {
      throw ValidationError("matrix_re is not square");
    }
    for (Eigen::Index k = 0; k < d; k++) {
      double im = j.contains("matrix_im") ? j["matrix_im"].at(i).at(k).get<double>() : 0.0;
      m(i, k) = Complex(re.at(i).at(k).get<double>(), im);
    }
  }
  return DensityOperator::unchecked(std::move(m), Register(std::move(names)));
}

}  // namespace dissension

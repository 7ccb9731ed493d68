// Copyright 2026 The photstat Authors
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

#include "photstat/circuits.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "photstat/errors.hpp"

namespace photstat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  // fmod of a value just below a multiple of 2pi can round up to 2pi.
  if (w >= two_pi) w = 0.0;
  return w;
}

Circuit dft(int ports) {
  if (ports < 2) {
    throw DomainError("dft: need at least 2 ports");
  }
  const auto n = static_cast<std::size_t>(ports);
  const double norm = 1.0 / std::sqrt(static_cast<double>(ports));
  ComplexMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce the exponent mod N so the phase argument stays small.
      const auto e = static_cast<double>((j * k) % n);
      u(j, k) = std::polar(norm, 2.0 * std::numbers::pi * e / ports);
    }
  }
  return Circuit(std::move(u), DftKind{ports});
}

Circuit symmetric(double phi) {
  const double wrapped = wrap_phase(phi);
  const Complex e = std::polar(1.0, wrapped);
  const Complex alpha = (2.0 + e) / 3.0;
  const Complex beta = (-1.0 + e) / 3.0;
  ComplexMatrix u{{alpha, beta, beta}, {beta, alpha, beta}, {beta, beta, alpha}};
  return Circuit(std::move(u), SymmetricKind{wrapped});
}

Circuit beamsplitter(double reflectance) {
  if (!(reflectance >= 0.0 && reflectance <= 1.0)) {
    throw DomainError("beamsplitter: reflectance must lie in [0, 1]");
  }
  const double t = std::sqrt(1.0 - reflectance);
  const Complex r{0.0, std::sqrt(reflectance)};
  ComplexMatrix u{{t, r}, {r, t}};
  return Circuit(std::move(u), BeamsplitterKind{reflectance});
}

Circuit custom(ComplexMatrix u, double tol) {
  if (!u.is_square()) {
    throw DimensionError("custom: circuit matrix must be square");
  }
  const auto report = check_unitary(u, tol);
  if (!report.pass) {
    std::ostringstream msg;
    msg << "custom: matrix is not unitary (max |U^dagger U - I| = " << report.max_deviation
        << ", tolerance " << tol << ")";
    throw UnitarityError(msg.str(), report.max_deviation);
  }
  return Circuit(std::move(u), CustomKind{});
}

namespace {

std::string shortest(double v) {
  char buf[32];
  return std::string(buf, std::to_chars(buf, buf + sizeof buf, v).ptr);
}

}  // namespace

std::string Circuit::describe() const {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const DftKind &k) { out << "dft(" << k.ports << ")"; },
                 [&](const SymmetricKind &k) { out << "symmetric(phi=" << shortest(k.phi) << ")"; },
                 [&](const BeamsplitterKind &k) { out << "beamsplitter(R=" << shortest(k.reflectance) << ")"; },
                 [&](const CustomKind &) { out << "custom(" << ports() << ")"; },
             },
             kind_);
  return out.str();
}

}  // namespace photstat

#include "toriq/conifold.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace toriq {

std::string ComplexRational::to_string() const {
  std::string s = format_rational(re);
  s += im < 0 ? "-" : "+";
  s += format_rational(im < 0 ? Rational(-im) : im);
  return s + "i";
}

Cone conifold_cone() {
  return cone_from_generators({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

Fan resolve_conifold(Diagonal diagonal) {
  if (diagonal == Diagonal::A) {
    return fan_from_cones({cone_from_generators({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}),
                           cone_from_generators({{0, 0, 1}, {0, 1, 1}, {1, 1, 1}})});
  }
  return fan_from_cones({cone_from_generators({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}),
                         cone_from_generators({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}})});
}

std::string DeformationAbsorption::describe() const {
  std::ostringstream os;
  os << absorbed << "' = (" << scale.real() << (scale.imag() < 0 ? "" : "+") << scale.imag()
     << "i)*" << absorbed << " + (" << shift.real() << (shift.imag() < 0 ? "" : "+")
     << shift.imag() << "i)";
  return os.str();
}

DeformationAbsorption absorb_deformation(Complex gamma, Complex lambda, unsigned seed,
                                         int samples) {
  if (gamma == Complex(0.0, 0.0)) throw std::domain_error("degenerate absorption");

  DeformationAbsorption out;
  out.gamma = gamma;
  out.lambda = lambda;
  out.absorbed = "a01";
  out.scale = gamma;
  out.shift = -lambda;
  out.samples = samples;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto draw = [&] { return Complex(u(rng), u(rng)); };
  for (int s = 0; s < samples; ++s) {
    const Complex a00 = draw(), a01 = draw(), a10 = draw(), a11 = draw();
    const Complex original = a00 * a11 - gamma * a01 * a10 + lambda * a10;
    const Complex a01p = out.scale * a01 + out.shift;
    const Complex rewritten = a00 * a11 - a01p * a10;
    out.max_residual = std::max(out.max_residual, std::abs(original - rewritten));
  }
  return out;
}

}  // namespace toriq

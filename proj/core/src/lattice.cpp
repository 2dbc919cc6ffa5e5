#include "dqm/lattice.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "dqm/errors.hpp"
#include "json.hpp"

namespace dqm {

LatticeState::LatticeState(std::vector<Complex> amplitudes, double epsilon)
    : amplitudes_(std::move(amplitudes)), epsilon_(epsilon) {
  if (amplitudes_.empty()) {
    throw DomainError("LatticeState: at least one site is required");
  }
  if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_)) {
    throw DomainError("LatticeState: epsilon must be positive and finite");
  }
}

LatticeState LatticeState::kronecker(std::size_t size, std::size_t site, double epsilon) {
  if (site >= size) {
    throw DomainError("LatticeState::kronecker: site outside the lattice");
  }
  std::vector<Complex> amps(size, Complex{0.0, 0.0});
  amps[site] = 1.0;
  return LatticeState(std::move(amps), epsilon);
}

double LatticeState::norm_squared() const noexcept {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return acc;
}

double LatticeState::norm() const noexcept { return std::sqrt(norm_squared()); }

Complex inner_product(const LatticeState& a, const LatticeState& b) {
  if (a.size() != b.size()) {
    throw SizeMismatchError("inner_product: states have different site counts");
  }
  if (a.epsilon() != b.epsilon()) {
    throw SizeMismatchError("inner_product: states have different lattice spacings");
  }
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < a.size(); ++j) acc += std::conj(a[j]) * b[j];
  return acc;
}

namespace {

Complex neighbour(const LatticeState& f, std::ptrdiff_t j, BoundaryRule boundary) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  if (j >= 0 && j < n) return f[static_cast<std::size_t>(j)];
  if (boundary == BoundaryRule::ZeroPadded) return {0.0, 0.0};
  const std::ptrdiff_t wrapped = ((j % n) + n) % n;
  return f[static_cast<std::size_t>(wrapped)];
}

}  // namespace

LatticeState apply_difference(DifferenceKind kind, const LatticeState& f,
                              BoundaryRule boundary) {
  if (kind == DifferenceKind::Symmetric) {
    throw DomainError(
        "apply_difference: the symmetric difference needs half-step values; "
        "use the half-step propagator in cayley.hpp");
  }
  std::vector<Complex> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto i = static_cast<std::ptrdiff_t>(j);
    switch (kind) {
      case DifferenceKind::Forward:
        out[j] = neighbour(f, i + 1, boundary) - f[j];
        break;
      case DifferenceKind::Backward:
        out[j] = f[j] - neighbour(f, i - 1, boundary);
        break;
      case DifferenceKind::Mean:
        out[j] = 0.5 * (neighbour(f, i + 1, boundary) + f[j]);
        break;
      case DifferenceKind::Symmetric:
        break;
    }
  }
  return LatticeState(std::move(out), f.epsilon());
}

LatticeState position_apply(const LatticeState& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    out[j] = static_cast<double>(j) * f.epsilon() * f[j];
  }
  return LatticeState(std::move(out), f.epsilon());
}

std::string to_json(const LatticeState& f) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (const auto& a : f.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  nlohmann::json doc;
  doc["epsilon"] = f.epsilon();
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc.dump();
}

LatticeState lattice_state_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("lattice state JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("re")) {
    throw DomainError("lattice state JSON: missing \"re\" array");
  }
  const auto re = doc.at("re").get<std::vector<double>>();
  std::vector<double> im(re.size(), 0.0);
  if (doc.contains("im")) im = doc.at("im").get<std::vector<double>>();
  if (im.size() != re.size()) {
    throw SizeMismatchError("lattice state JSON: \"re\" and \"im\" differ in length");
  }
  const double epsilon = doc.value("epsilon", 1.0);
  std::vector<Complex> amps(re.size());
  for (std::size_t j = 0; j < re.size(); ++j) amps[j] = {re[j], im[j]};
  return LatticeState(std::move(amps), epsilon);
}

std::string to_csv(const LatticeState& f) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "j,re,im\n";
  for (std::size_t j = 0; j < f.size(); ++j) {
    os << j << ',' << f[j].real() << ',' << f[j].imag() << '\n';
  }
  return os.str();
}

}  // namespace dqm

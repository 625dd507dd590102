#include "extwb/charmod.hpp"

namespace extwb::charmod {

TorusChar::TorusChar(const Tower& tw, FieldPtr field, long long e)
    : tw_(&tw), field_(std::move(field)), cache_(std::make_shared<Cache>()) {
  const auto N = static_cast<long long>(tw.order());
  e_ = static_cast<std::uint64_t>(((e % N) + N) % N);
  cache_->values.resize(tw.order());
}

const Scalar& TorusChar::value_at(std::uint64_t k) const {
  std::lock_guard lock(cache_->mu);
  auto& slot = cache_->values[k];
  if (!slot) slot = field_->root_of_unity(modulus(), static_cast<long long>(k));
  return *slot;
}

const Scalar& TorusChar::eval(Elem t) const {
  const std::uint64_t N = modulus();
  const auto k = static_cast<std::uint64_t>(static_cast<unsigned __int128>(e_) * tw_->log(t) % N);
  return value_at(k);
}

const Scalar& TorusChar::eval_inv(Elem t) const {
  const std::uint64_t N = modulus();
  const auto k = static_cast<std::uint64_t>(static_cast<unsigned __int128>(e_) * tw_->log(t) % N);
  return value_at((N - k) % N);
}

bool TorusChar::is_trivial_on_level(unsigned i) const {
  // θ(g_i) = ζ^{e·step}; trivial iff N | e·step.
  const std::uint64_t N = modulus();
  const std::uint64_t step = N / (tw_->level_size(i) - 1);
  return static_cast<unsigned __int128>(e_) * step % N == 0;
}

bool TorusChar::is_trivial_on_center() const {
  if (tw_->p() == 2) return true;
  return e_ % 2 == 0;
}

std::vector<int> TorusChar::i_theta() const {
  if (is_trivial()) return {1};
  return {};
}

TorusChar nu(const TorusChar& lambda, const TorusChar& mu) {
  return lambda.with_exponent(static_cast<long long>(lambda.exponent() + mu.exponent()));
}

coeff::CoeffMode default_mode(const Tower& tw) { return coeff::CoeffMode::cyclotomic(tw.order()); }

}  // namespace extwb::charmod

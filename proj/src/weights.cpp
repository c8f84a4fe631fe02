#include "cycinv/weights.hpp"

#include <charconv>
#include <sstream>

#include "cycinv/errors.hpp"

namespace cycinv {

WeightSystem::WeightSystem(std::int64_t n, std::vector<std::int64_t> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n_ < 3) throw ValidationError("group order n must be at least 3, got " + std::to_string(n_));
  if (n_ > kMaxOrder)
    throw ValidationError("group order n must be at most " + std::to_string(kMaxOrder));
  if (weights_.size() != 2 && weights_.size() != 3)
    throw ValidationError("expected 2 or 3 weights, got " + std::to_string(weights_.size()));
  for (auto w : weights_) {
    if (w <= 0 || w >= n_)
      throw ValidationError("weight " + std::to_string(w) + " is not in the open interval (0, " +
                            std::to_string(n_) + ")");
  }
  if (weights_.size() == 3) {
    const auto sum = weights_[0] + weights_[1] + weights_[2];
    if (sum % n_ != 0)
      throw ValidationError("SL condition violated: n must divide b+c+d, but " + std::to_string(n_) +
                            " does not divide " + std::to_string(sum));
  }
}

bool WeightSystem::is_invariant(std::span<const std::int64_t> exponents) const {
  if (exponents.size() != weights_.size())
    throw StructuralError("exponent vector length does not match the weight system");
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) acc = (acc + (exponents[k] % n_) * weights_[k]) % n_;
  return acc == 0;
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  os << "Z/" << n_ << " (";
  for (std::size_t k = 0; k < weights_.size(); ++k) os << (k ? "," : "") << weights_[k];
  os << ")";
  return os.str();
}

std::vector<std::int64_t> parse_weight_list(const std::string& text) {
  const auto malformed = [&text] { return ValidationError("malformed weight list '" + text + "'"); };
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw malformed();
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) throw malformed();
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace cycinv

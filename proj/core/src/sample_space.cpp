#include "ept/sample_space.hpp"

#include <unordered_map>

#include "ept/errors.hpp"

namespace ept {

namespace {

bool label_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ',' || c == '|' || c == '{' || c == '}') return false;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

}  // namespace

SampleSpace::SampleSpace(std::vector<std::string> labels) {
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  for (std::size_t i = 0; i < data->labels.size(); ++i) {
    const std::string& s = data->labels[i];
    if (!label_ok(s)) {
      throw DomainError("invalid outcome label '" + s +
                        "': labels must be non-empty and free of whitespace and of ',|{}'");
    }
    auto [it, fresh] = data->index.emplace(s, static_cast<int>(i));
    if (!fresh) throw DomainError("duplicate outcome label '" + s + "'");
  }
  data_ = std::move(data);
}

SampleSpace SampleSpace::with_size(int n, std::string_view prefix) {
  if (n < 0) throw DomainError("sample space size must be nonnegative");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return SampleSpace(std::move(labels));
}

std::optional<int> SampleSpace::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool SampleSpace::same_as(const SampleSpace& other) const {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

void require_same_space(const SampleSpace& a, const SampleSpace& b) {
  if (!a.same_as(b)) {
    throw SpaceMismatchError("operands live over different sample spaces");
  }
}

}  // namespace ept

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ept {

/// A finite set of labelled outcomes.  Copies share the underlying data, so
/// passing spaces around is cheap and identity checks are usually a pointer
/// comparison; two independently built spaces with identical label lists
/// compare equal as well.
class SampleSpace {
 public:
  /// Labels must be non-empty, contain no whitespace and none of ",|{}",
  /// and be pairwise distinct.  Throws DomainError otherwise.
  explicit SampleSpace(std::vector<std::string> labels);

  /// Convenience space with labels prefix1..prefixN.
  static SampleSpace with_size(int n, std::string_view prefix = "e");

  int size() const { return static_cast<int>(data_->labels.size()); }
  const std::string& label(int i) const { return data_->labels.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return data_->labels; }

  /// Index of a label, or nullopt if the label is unknown.
  std::optional<int> index_of(std::string_view label) const;

  bool same_as(const SampleSpace& other) const;
  friend bool operator==(const SampleSpace& a, const SampleSpace& b) { return a.same_as(b); }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws SpaceMismatchError unless the two spaces agree.
void require_same_space(const SampleSpace& a, const SampleSpace& b);

}  // namespace ept

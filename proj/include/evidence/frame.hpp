#ifndef EVIDENCE_FRAME_HPP
#define EVIDENCE_FRAME_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evidence {

using Mask = std::uint32_t;

inline constexpr std::size_t kMaxFrameSize = 16;
inline constexpr char kSeparator = '|';

/// A subset of a frame, stored as a membership bitmask. Bit i set means the
/// i-th frame element belongs to the set; the zero mask is the empty set.
class FocalSet {
 public:
  FocalSet() = default;
  /// Throws ValidationError if `bits` has members outside the first `width`.
  FocalSet(Mask bits, std::size_t width);

  Mask bits() const { return bits_; }
  std::size_t width() const { return width_; }
  bool empty() const { return bits_ == 0; }
  std::size_t cardinality() const;
  bool contains(std::size_t element) const;
  bool is_subset_of(const FocalSet& other) const;
  bool intersects(const FocalSet& other) const;

  friend bool operator==(const FocalSet&, const FocalSet&) = default;
  // Ordered by width first so that sets of one frame sort by bitmask.
  friend std::strong_ordering operator<=>(const FocalSet& a, const FocalSet& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
  std::size_t width_ = 0;
};

/// The frame of discernment: an ordered list of mutually exclusive labels.
class Frame {
 public:
  /// Validates: at least 2 labels, at most kMaxFrameSize, unique, nonempty,
  /// and free of the separator and surrounding whitespace.
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  FocalSet empty_set() const { return FocalSet(0, size()); }
  FocalSet full_set() const;
  FocalSet singleton(std::size_t i) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

Frame make_frame(std::vector<std::string> labels);

/// Parses "A|B|C" into the union of the named elements. Whitespace around
/// labels is ignored; repeated labels are harmless.
FocalSet parse_focal(std::string_view expr, const Frame& frame);

/// Inverse of parse_focal, with labels in frame order. The empty set renders
/// as "∅".
std::string render_focal(const FocalSet& set, const Frame& frame);

FocalSet intersect(const FocalSet& a, const FocalSet& b);
FocalSet unite(const FocalSet& a, const FocalSet& b);

/// All 2^n subsets, ∅ first, in ascending bitmask order.
std::vector<FocalSet> enumerate_powerset(const Frame& frame,
                                         std::size_t limit = kMaxFrameSize);

}  // namespace evidence

#endif  // EVIDENCE_FRAME_HPP

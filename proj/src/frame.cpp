#include "evidence/frame.hpp"

#include <bit>
#include <set>

#include "evidence/error.hpp"

namespace evidence {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

void require_same_frame(const FocalSet& a, const FocalSet& b) {
  if (a.width() != b.width()) {
    throw ValidationError("frame mismatch: focal sets over frames of size " +
                          std::to_string(a.width()) + " and " +
                          std::to_string(b.width()));
  }
}

}  // namespace

FocalSet::FocalSet(Mask bits, std::size_t width) : bits_(bits), width_(width) {
  if (width > kMaxFrameSize) {
    throw ValidationError("focal set width " + std::to_string(width) +
                          " exceeds the frame-size limit");
  }
  if ((bits >> width) != 0) {
    throw ValidationError("focal set has members outside a frame of size " +
                          std::to_string(width));
  }
}

std::size_t FocalSet::cardinality() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

bool FocalSet::contains(std::size_t element) const {
  return element < width_ && ((bits_ >> element) & 1U) != 0;
}

bool FocalSet::is_subset_of(const FocalSet& other) const {
  return width_ == other.width_ && (bits_ & ~other.bits_) == 0;
}

bool FocalSet::intersects(const FocalSet& other) const {
  return (bits_ & other.bits_) != 0;
}

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw ValidationError("a frame needs at least 2 elements, got " +
                          std::to_string(labels_.size()));
  }
  if (labels_.size() > kMaxFrameSize) {
    throw ValidationError("frame of " + std::to_string(labels_.size()) +
                          " elements exceeds the limit of " +
                          std::to_string(kMaxFrameSize));
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw ValidationError("empty frame label");
    if (label.find(kSeparator) != std::string::npos) {
      throw ValidationError("frame label '" + label +
                            "' contains the separator '|'");
    }
    if (trim(label) != label) {
      throw ValidationError("frame label '" + label +
                            "' has surrounding whitespace");
    }
    if (!seen.insert(label).second) {
      throw ValidationError("duplicate frame label '" + label + "'");
    }
  }
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

FocalSet Frame::full_set() const {
  return FocalSet(static_cast<Mask>((Mask{1} << size()) - 1), size());
}

FocalSet Frame::singleton(std::size_t i) const {
  if (i >= size()) throw ValidationError("element index out of range");
  return FocalSet(Mask{1} << i, size());
}

Frame make_frame(std::vector<std::string> labels) {
  return Frame(std::move(labels));
}

FocalSet parse_focal(std::string_view expr, const Frame& frame) {
  if (trim(expr).empty()) throw ValidationError("empty focal set expression");
  Mask bits = 0;
  std::size_t start = 0;
  while (true) {
    const auto end = expr.find(kSeparator, start);
    const auto token =
        trim(expr.substr(start, end == std::string_view::npos ? end : end - start));
    if (token.empty()) {
      throw ValidationError("empty label in focal set expression '" +
                            std::string(expr) + "'");
    }
    const auto index = frame.index_of(token);
    if (!index) {
      throw ValidationError("unknown label '" + std::string(token) +
                            "' in focal set expression '" + std::string(expr) +
                            "'");
    }
    bits |= Mask{1} << *index;
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return FocalSet(bits, frame.size());
}

std::string render_focal(const FocalSet& set, const Frame& frame) {
  if (set.width() != frame.size()) {
    throw ValidationError("focal set does not belong to this frame");
  }
  if (set.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!set.contains(i)) continue;
    if (!out.empty()) out += kSeparator;
    out += frame.label(i);
  }
  return out;
}

FocalSet intersect(const FocalSet& a, const FocalSet& b) {
  require_same_frame(a, b);
  return FocalSet(a.bits() & b.bits(), a.width());
}

FocalSet unite(const FocalSet& a, const FocalSet& b) {
  require_same_frame(a, b);
  return FocalSet(a.bits() | b.bits(), a.width());
}

std::vector<FocalSet> enumerate_powerset(const Frame& frame, std::size_t limit) {
  if (frame.size() > limit) {
    throw ValidationError("frame of " + std::to_string(frame.size()) +
                          " elements exceeds the powerset limit of " +
                          std::to_string(limit));
  }
  const Mask count = Mask{1} << frame.size();
  std::vector<FocalSet> out;
  out.reserve(count);
  for (Mask bits = 0; bits < count; ++bits) out.emplace_back(bits, frame.size());
  return out;
}

}  // namespace evidence

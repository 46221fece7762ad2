#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zeropos {

namespace detail {
struct TransparentHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view sv) const {
    return std::hash<std::string_view>{}(sv);
  }
};
}  // namespace detail

// Interns strings to dense ids in first-seen order.
class Vocab {
 public:
  int add(std::string_view w) {
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(words_.size());
    words_.emplace_back(w);
    index_.emplace(words_.back(), id);
    return id;
  }

  // -1 when absent
  int find(std::string_view w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }

  bool contains(std::string_view w) const { return find(w) >= 0; }
  const std::string& word(int id) const { return words_[id]; }
  int size() const { return static_cast<int>(words_.size()); }

 private:
  std::unordered_map<std::string, int, detail::TransparentHash, std::equal_to<>>
      index_;
  std::vector<std::string> words_;
};

}  // namespace zeropos

#include "nilorbit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nilorbit/errors.hpp"

namespace nilorbit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  for (int p : parts_)
    if (p < 1) throw HypothesisError("partition parts must be positive");
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  std::vector<int> parts;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw HypothesisError("cannot parse partition '" + text + "'");
    parts.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : body) {
    if (c == ',') {
      flush();
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      throw HypothesisError("cannot parse partition '" + text + "'");
    }
  }
  if (!cur.empty()) flush();
  if (parts.empty()) throw HypothesisError("cannot parse partition '" + text + "'");
  return Partition(parts);
}

std::vector<Partition> Partition::all(int total) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (total < 0) throw HypothesisError("negative partition total");
  rec(total, total);
  return out;  // descending lexicographic by construction
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::very_even() const {
  if (parts_.empty()) return false;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] % 2 != 0) return false;
  }
  for (size_t i = 0; i < parts_.size();) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

std::string Partition::str() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.total() != b.total())
    throw HypothesisError("dominance compares partitions of equal total only (" +
                          std::to_string(a.total()) + " vs " +
                          std::to_string(b.total()) + ")");
  const size_t k = std::max(a.parts().size(), b.parts().size());
  long long sa = 0, sb = 0;
  for (size_t i = 0; i < k; ++i) {
    sa += i < a.parts().size() ? a.parts()[i] : 0;
    sb += i < b.parts().size() ? b.parts()[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

}  // namespace nilorbit

#pragma once

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace jackpos {

/// Write-once, read-many table. Racing inserts keep the first value.
template <class K, class V, class H = std::hash<K>>
class Memo {
 public:
  bool find(const K& k, V& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }

  V insert(const K& k, V v) {
    std::unique_lock lock(mu_);
    return map_.try_emplace(k, std::move(v)).first->second;
  }

  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<K, V, H> map_;
};

}  // namespace jackpos

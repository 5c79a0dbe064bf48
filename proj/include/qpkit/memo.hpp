#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace qpkit {

/// Hash map shared between worker threads. Entries are idempotent: two
/// writers racing on one key store equal values, and the last write wins.
template <class Key, class Value>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  /// Returns false (and stores nothing) when the table is full.
  bool store(const Key& key, Value value, std::size_t capacity) {
    std::unique_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) {
      it->second = std::move(value);
      return true;
    }
    if (table_.size() >= capacity) return false;
    table_.emplace(key, std::move(value));
    return true;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value> table_;
};

}  // namespace qpkit

#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace dynmag {

/// Thread-safe memo table. The compute callback runs without the lock held, so
/// it may recurse into the same table; concurrent duplicate fills are harmless
/// because every value is a pure function of its key.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
public:
    template <class F>
    const Value& get_or_compute(const Key& key, F&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value, Compare> table_;
};

}  // namespace dynmag

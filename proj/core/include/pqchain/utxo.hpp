#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "pqchain/transaction.hpp"

namespace pqchain {

struct OutPoint {
    Hash256 txid{};
    std::uint32_t index = 0;

    friend auto operator<=>(const OutPoint&, const OutPoint&) = default;
};

/// Map of unspent outputs keyed by (txid, index). Values are immutable once
/// inserted; apply() mutates the set and callers serialize state transitions.
class UtxoSet {
   public:
    std::optional<TxOutput> find(const Hash256& txid, std::uint32_t index) const;
    bool contains(const Hash256& txid, std::uint32_t index) const;

    /// Sum of values of outputs paying `who`.
    std::uint64_t balance(const Address& who) const;

    /// Sum over the whole set.
    std::uint64_t total_value() const;

    /// Spends the transaction's inputs and inserts its outputs. Throws
    /// DoubleSpend if an input is not present, InvalidTransaction if the
    /// transaction does not verify against this set.
    void apply(const Transaction& tx);

    /// Resolver backed by this set; the set must outlive the resolver.
    OutputResolver resolver() const;

    void insert(const OutPoint& point, const TxOutput& output);

    std::size_t size() const { return entries_.size(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

   private:
    std::map<OutPoint, TxOutput> entries_;
};

}  // namespace pqchain

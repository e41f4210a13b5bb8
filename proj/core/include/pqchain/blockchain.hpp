#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pqchain/pow.hpp"
#include "pqchain/transaction.hpp"
#include "pqchain/utxo.hpp"

namespace pqchain {

struct Block {
    Hash256 block_hash{};
    Hash256 prev_hash{};
    std::vector<Transaction> transactions;  // non-empty
    std::uint64_t generation_time = 0;      // ms since Unix epoch
    std::uint64_t nonce = 0;                // r from the proof-of-work search
};

/// prev_hash(32) || tx_count(u32 BE) || canonical tx encodings || time(u64 BE).
/// Excludes nonce and block hash; they are proof-of-work outputs.
/// Throws EmptyBlock for an empty transaction list.
Bytes canonical_block_bytes(const Hash256& prev_hash,
                            const std::vector<Transaction>& transactions,
                            std::uint64_t generation_time);

/// Recomputes Hash^nonce over the canonical block bytes, compares with the
/// stored block hash, and checks the target predicate. Cost equals nonce
/// hash invocations; nonces outside [1, max_iterations] are rejected without
/// recomputing.
VerifyResult verify_block(const Block& block, const PowConfig& config);

struct ChainValidationReport {
    bool valid = false;
    std::size_t block_index = 0;  // first failing block when !valid
    std::string reason;

    explicit operator bool() const { return valid; }
};

/// Ordered blocks under one proof-of-work configuration. Mutation requires
/// exclusive access; reads may be concurrent between mutations.
class Blockchain {
   public:
    Blockchain() = default;
    explicit Blockchain(PowConfig pow) : pow_(pow) {}

    /// Verifies the transactions against the replayed UTXO state, runs the
    /// proof-of-work search and appends the block. The genesis block links
    /// to the all-zero hash. Throws on invalid transactions before any
    /// proof-of-work is spent, and propagates IterationCapExceeded.
    const Block& mine_block(std::vector<Transaction> transactions,
                            std::uint64_t generation_time);

    /// Linkage, per-block proof-of-work verification and a sequential UTXO
    /// replay from genesis. Reports the first failure.
    ChainValidationReport validate() const;

    /// UTXO state after replaying every block. Throws InvalidTransaction /
    /// DoubleSpend when the chain does not replay cleanly.
    UtxoSet replay_utxos() const;

    Hash256 tip_hash() const;

    const std::vector<Block>& blocks() const { return blocks_; }
    const PowConfig& pow() const { return pow_; }
    bool empty() const { return blocks_.empty(); }
    std::size_t height() const { return blocks_.size(); }

    /// Adopts externally stored blocks without verification; callers run
    /// validate() to judge them.
    static Blockchain adopt(PowConfig pow, std::vector<Block> blocks);

   private:
    std::vector<Block> blocks_;
    PowConfig pow_;
};

}  // namespace pqchain

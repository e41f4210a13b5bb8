#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pqchain/bytes.hpp"
#include "pqchain/scheme.hpp"
#include "pqchain/wallet.hpp"

namespace pqchain {

struct TxOutput {
    std::uint64_t value = 0;
    Address recipient;

    /// value(u64 BE) || recipient(32)
    Bytes canonical_bytes() const;

    friend bool operator==(const TxOutput&, const TxOutput&) = default;
};

struct TxInput {
    Hash256 prev_txid{};
    std::uint32_t prev_output_index = 0;
    Bytes signature;  // empty before signing
    Bytes public_key;
    SchemeDescriptor scheme;
};

struct Transaction {
    Hash256 txid{};
    std::vector<TxInput> inputs;
    std::vector<TxOutput> outputs;
    std::uint64_t generation_time = 0;  // ms since Unix epoch

    bool is_coinbase() const { return inputs.empty(); }
};

/// Canonical transaction encoding (consumed by block hashing and golden
/// tests; all integers big-endian, byte strings u32-length-prefixed):
///   inputs[u32 count; each: prev_txid(32) || prev_output_index(u32) ||
///          signature(len+bytes) || public_key(len+bytes) || scheme_id(len+utf8)]
///   outputs[u32 count; each: value(u64) || recipient(32)]
///   generation_time(u64)
Bytes canonical_tx_bytes(const Transaction& tx);

/// SHA-256 over the canonical encoding with every input's signature replaced
/// by the empty byte string. Signatures never affect the id.
Hash256 compute_txid(const Transaction& tx);

/// Mints `amount` to `recipient` with zero inputs. Throws ZeroAmount.
Transaction coinbase_transaction(const Address& recipient, std::uint64_t amount,
                                 std::uint64_t time);

/// Looks up the output a transaction input spends.
using OutputResolver =
    std::function<std::optional<TxOutput>(const Hash256& txid, std::uint32_t index)>;

enum class ChangePolicy {
    OmitZeroChange,      // no change output when change would be 0
    ExplicitZeroChange,  // always emit the sender's post-balance output
};

class UtxoSet;

/// Selects sender-owned UTXOs in ascending (txid, index) order until the
/// amount is covered. Outputs are [change-to-sender, payment]; the change
/// output is dropped when zero under OmitZeroChange. Inputs are unsigned.
/// Throws InsufficientFunds.
Transaction build_transaction(const Wallet& sender, const UtxoSet& utxos,
                              const Address& recipient, std::uint64_t amount,
                              std::uint64_t time,
                              ChangePolicy policy = ChangePolicy::OmitZeroChange);

/// Byte string each input signature covers: the canonical encoding with all
/// signatures blank and all public keys set, then the input index (u32 BE),
/// then the referenced output's canonical bytes. Binding the index and the
/// spent output prevents replaying one input's signature on another.
Bytes signing_payload(const Transaction& tx, std::uint32_t input_index,
                      const TxOutput& referenced);

/// Signs every input with the sender's key, attaches the public key, and
/// recomputes the txid. Throws ForeignInput if a referenced output does not
/// pay the sender, UnresolvedInput if the resolver has no entry.
Transaction sign_transaction(const Wallet& sender, Transaction tx,
                             const OutputResolver& resolve);

struct VerifyResult {
    bool ok = false;
    std::string reason;  // first failing check when !ok

    explicit operator bool() const { return ok; }
};

/// Checks, in order: txid recomputes; every input's public key hashes to the
/// referenced output's address; every input signature verifies over its
/// signing payload; input and output values balance. Failures are reported,
/// never thrown.
VerifyResult verify_transaction(const Transaction& tx, const OutputResolver& resolve);

}  // namespace pqchain

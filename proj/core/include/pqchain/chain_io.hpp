#pragma once

#include <filesystem>
#include <string>

#include "pqchain/blockchain.hpp"

namespace pqchain {

/// Chain file format: line-oriented JSON. The first line is a header object
/// carrying the format tag and the proof-of-work configuration; every
/// following line is one block object with hex-encoded hashes and keys, the
/// nonce as a decimal integer and transactions embedded. Serialization is
/// canonical (sorted keys, compact separators), so save(load(f)) reproduces
/// f byte for byte.
std::string chain_to_text(const Blockchain& chain);

/// Throws ParseError on malformed input.
Blockchain chain_from_text(const std::string& text);

void save_chain(const Blockchain& chain, const std::filesystem::path& path);
Blockchain load_chain(const std::filesystem::path& path);

}  // namespace pqchain

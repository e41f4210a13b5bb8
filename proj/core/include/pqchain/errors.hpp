#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pqchain {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class UnsupportedScheme : public Error {
   public:
    using Error::Error;
};

class BackendFailure : public Error {
   public:
    using Error::Error;
};

class EmptyKey : public Error {
   public:
    EmptyKey() : Error("public key must not be empty") {}
};

class ZeroAmount : public Error {
   public:
    ZeroAmount() : Error("amount must be positive") {}
};

class InsufficientFunds : public Error {
   public:
    InsufficientFunds(std::uint64_t available, std::uint64_t requested)
        : Error("insufficient funds: available " + std::to_string(available) +
                ", requested " + std::to_string(requested)),
          available_(available),
          requested_(requested) {}

    std::uint64_t available() const { return available_; }
    std::uint64_t requested() const { return requested_; }

   private:
    std::uint64_t available_;
    std::uint64_t requested_;
};

class ForeignInput : public Error {
   public:
    using Error::Error;
};

class UnresolvedInput : public Error {
   public:
    using Error::Error;
};

class DoubleSpend : public Error {
   public:
    using Error::Error;
};

class InvalidTransaction : public Error {
   public:
    using Error::Error;
};

class EmptyBlock : public Error {
   public:
    EmptyBlock() : Error("block must contain at least one transaction") {}
};

class IterationCapExceeded : public Error {
   public:
    explicit IterationCapExceeded(std::uint64_t cap)
        : Error("proof-of-work iteration cap " + std::to_string(cap) +
                " exceeded; difficulty too large for this content"),
          cap_(cap) {}

    std::uint64_t cap() const { return cap_; }

   private:
    std::uint64_t cap_;
};

class DegenerateInput : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace pqchain

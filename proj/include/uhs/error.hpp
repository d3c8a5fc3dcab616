// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace uhs {

// Input outside an operation's domain: out-of-range keys, parent of the root,
// invalid radix plans.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IndexOutOfHeap : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class EmptyHeap : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Too few measurements, or a size span too narrow, to fit a growth class.
class InsufficientData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace uhs

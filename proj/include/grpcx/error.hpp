#pragma once

#include <stdexcept>
#include <string>

namespace grpcx
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: cycle strings, group files, builtin names, flags.
class InputError : public Error
{
public:
  using Error::Error;
};

// A configured resource cap (order, degree, lattice size) would be exceeded.
class CapExceeded : public Error
{
public:
  using Error::Error;
};

// An operation was called outside its domain, e.g. a complement in a group
// that is not a span of gems.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

// A computed result contradicts an invariant that must hold, e.g. the
// measure bound chain.
class AssertionFailure : public Error
{
public:
  using Error::Error;
};

} // namespace grpcx

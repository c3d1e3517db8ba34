#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

/// A point handed to a retraction does not satisfy x^d + y^d + z^d = 1.
class NotOnSurfaceError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// A point handed to locate() is not on the real skeleton S_d.
class NotOnSkeletonError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// A homogeneous point lies on the Fermat curve itself.
class OnCurveError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Region bookkeeping produced an impossible sign pattern.
class RegionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Malformed complex document. The message carries the offending field path.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace fermat

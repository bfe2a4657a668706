#pragma once

#include <stdexcept>
#include <string>

namespace obsroute {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPolygon : Error {
    using Error::Error;
};
struct PointInsideBody : Error {
    using Error::Error;
};
struct BodiesIntersect : Error {
    using Error::Error;
};
struct NonPositiveFatness : Error {
    using Error::Error;
};
struct PointNotOnBoundary : Error {
    using Error::Error;
};
struct InvalidInstance : Error {
    using Error::Error;
};
struct PointInsideObstacle : Error {
    using Error::Error;
};
struct NotTranslateFamily : Error {
    using Error::Error;
};
struct EmptyRegionSet : Error {
    using Error::Error;
};
struct TooManyRegions : Error {
    using Error::Error;
};
struct TooManyObstacles : Error {
    using Error::Error;
};
struct InvalidParameters : Error {
    using Error::Error;
};
struct PointsNotInGrid : Error {
    using Error::Error;
};
struct InvalidSetSystem : Error {
    using Error::Error;
};
struct ClusterNotHiding : Error {
    using Error::Error;
};
struct RouteIntersectsInterior : Error {
    using Error::Error;
};
struct InternalInvariantViolation : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace obsroute

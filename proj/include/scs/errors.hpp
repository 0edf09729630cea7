#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is syntactically broken (bad JSON, bad circulant string, ...).
struct ParseError : Error {
    using Error::Error;
};

// Input parses but violates the model (overlap, disconnection, ...).
struct ValidationError : Error {
    using Error::Error;
};

struct OverlappingCircles : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownEdge : ValidationError {
    using ValidationError::ValidationError;
};

struct NotBipartite : ValidationError {
    std::vector<int> odd_cycle;
    NotBipartite(const std::string& msg, std::vector<int> cycle)
        : ValidationError(msg), odd_cycle(std::move(cycle)) {}
};

struct NotSynchronizable : ValidationError {
    std::pair<int, int> edge{-1, -1};
    NotSynchronizable(const std::string& msg, std::pair<int, int> e)
        : ValidationError(msg), edge(e) {}
};

struct InvalidParams : ValidationError {
    using ValidationError::ValidationError;
};

struct NotATree : ValidationError {
    using ValidationError::ValidationError;
};

// A quantity the model guarantees to be integral came out non-integral;
// this always means a bug or an invalid input slipped through.
struct NonIntegralRingLength : Error {
    using Error::Error;
};

struct NonIntegralTieLength : Error {
    using Error::Error;
};

struct NonIntegralOffset : Error {
    using Error::Error;
};

struct PlacementSpacingViolation : Error {
    using Error::Error;
};

struct DirectionNotOnRing : Error {
    using Error::Error;
};

struct LayoutCollision : Error {
    using Error::Error;
};

struct ReductionMismatch : Error {
    std::vector<int> actual;
    std::vector<int> expected;
    ReductionMismatch(const std::string& msg, std::vector<int> got, std::vector<int> want)
        : Error(msg), actual(std::move(got)), expected(std::move(want)) {}
};

struct InsufficientHorizon : Error {
    using Error::Error;
};

// Resource caps; the CLI maps these to a distinct exit code.
struct BudgetError : Error {
    using Error::Error;
};

struct BudgetExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct EventCapExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct HorizonOverflow : BudgetError {
    using BudgetError::BudgetError;
};

}  // namespace scs

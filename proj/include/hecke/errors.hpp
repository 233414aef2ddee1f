#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base for all exact-arithmetic failures (division by zero, bad input, ...).
class field_error : public std::runtime_error {
public:
    explicit field_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a point where the reduced denominator vanishes.
// `order` is the vanishing order of the denominator at the point.
class pole_error : public field_error {
public:
    pole_error(const std::string& what, int order)
        : field_error(what), order_(order) {}
    int order() const noexcept { return order_; }

private:
    int order_;
};

// Invalid row list; `row` is the 1-based index of the first offending row.
class diagram_error : public std::runtime_error {
public:
    diagram_error(const std::string& what, int row)
        : std::runtime_error(what), row_(row) {}
    int row() const noexcept { return row_; }

private:
    int row_;
};

// A pair sequence that is not a convex order of a biconvex set;
// `position` is the 0-based index of the first offending pair.
class convexity_error : public std::runtime_error {
public:
    convexity_error(const std::string& what, int position)
        : std::runtime_error(what), position_(position) {}
    int position() const noexcept { return position_; }

private:
    int position_;
};

} // namespace hecke

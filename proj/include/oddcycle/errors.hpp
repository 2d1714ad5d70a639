#ifndef ODDCYCLE_ERRORS_HPP
#define ODDCYCLE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddcycle {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Errc {
    endpoint_out_of_range,
    self_loop,
    duplicate_edge,
    too_large,
    invalid_delta,
    k_too_small,
    eps_too_small,
    bad_param,
    io_error,
    format_error,
    girth_violation,
    independence_violation,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Parse failure in the graph text format; line numbers are 1-based.
class FormatError : public Error {
public:
    FormatError(int line, const std::string& msg)
        : Error(Errc::format_error, "line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An odd cycle of length <= 2k+1 was found where the caller promised none.
// The witness is a closed walk v_0,...,v_L = v_0 of odd length.
class GirthViolation : public Error {
public:
    GirthViolation(std::vector<Vertex> witness, const std::string& msg)
        : Error(Errc::girth_violation, msg), witness_(std::move(witness)) {}
    const std::vector<Vertex>& witness() const { return witness_; }

private:
    std::vector<Vertex> witness_;
};

// A harvested BFS layer contained an edge, which implies a short odd closed
// walk and hence that the odd-girth precondition fails.
class IndependenceViolation : public Error {
public:
    IndependenceViolation(Edge violating, std::vector<Vertex> implied_walk, const std::string& msg)
        : Error(Errc::independence_violation, msg),
          violating_(violating),
          implied_walk_(std::move(implied_walk)) {}
    Edge violating_edge() const { return violating_; }
    const std::vector<Vertex>& implied_walk() const { return implied_walk_; }

private:
    Edge violating_;
    std::vector<Vertex> implied_walk_;
};

}  // namespace oddcycle

#endif

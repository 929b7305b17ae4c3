#pragma once

#include <stdexcept>
#include <string>

namespace semibandit {

enum class Errc {
    invalid_strategy,
    degenerate_environment,
    invalid_observation,
    no_feasible_strategy,
    invalid_graph,
    instance_too_large,
    unsupported_instance,
    sequencing,
    domain,
    config,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_strategy:        return "invalid-strategy";
        case Errc::degenerate_environment:  return "degenerate-environment";
        case Errc::invalid_observation:     return "invalid-observation";
        case Errc::no_feasible_strategy:    return "no-feasible-strategy";
        case Errc::invalid_graph:           return "invalid-graph";
        case Errc::instance_too_large:      return "instance-too-large";
        case Errc::unsupported_instance:    return "unsupported-instance";
        case Errc::sequencing:              return "sequencing";
        case Errc::domain:                  return "domain";
        case Errc::config:                  return "config";
    }
    return "unknown";
}

class SimError : public std::runtime_error {
public:
    SimError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw SimError(code, msg);
}

} // namespace semibandit

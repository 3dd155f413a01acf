#pragma once

#include <string>

namespace krsdet {

/// Outcome of a JSON request. code 0: success; 1: a verification suite
/// reported failures (output still carries the report); 2: malformed
/// request or invalid input; 3: internal error.
struct ApiResult {
    int code = 0;
    std::string output;
    std::string error;
};

/// Evaluates a request of the form {"command": "...", ...}. Commands mirror
/// the CLI subcommands.
ApiResult eval_request(const std::string& request_json);

const char* api_version();

}  // namespace krsdet

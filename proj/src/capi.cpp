#include "krsdet.h"

#include <new>
#include <string>

#include "krsdet/api.hpp"

struct krsdet_result {
    int code;
    std::string output;
    std::string error;
};

extern "C" {

const char* krsdet_version(void) {
    return krsdet::api_version();
}

krsdet_result* krsdet_eval(const char* request_json) {
    auto* result = new (std::nothrow) krsdet_result{};
    if (!result) return nullptr;
    if (!request_json) {
        result->code = KRSDET_ERR_USAGE;
        result->error = "null request";
        return result;
    }
    try {
        krsdet::ApiResult r = krsdet::eval_request(request_json);
        result->code = r.code;
        result->output = std::move(r.output);
        result->error = std::move(r.error);
    } catch (...) {
        result->code = KRSDET_ERR_INTERNAL;
        result->error = "unexpected exception";
    }
    return result;
}

int krsdet_result_code(const krsdet_result* result) {
    return result ? result->code : KRSDET_ERR_INTERNAL;
}

const char* krsdet_result_json(const krsdet_result* result) {
    if (!result || result->output.empty()) return nullptr;
    return result->output.c_str();
}

const char* krsdet_result_error(const krsdet_result* result) {
    if (!result || result->error.empty()) return nullptr;
    return result->error.c_str();
}

void krsdet_result_free(krsdet_result* result) {
    delete result;
}

}  // extern "C"

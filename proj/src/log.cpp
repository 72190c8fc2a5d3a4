#include "spikeplace/log.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace spikeplace::logging {

namespace {

Level parse_env() {
    const char* env = std::getenv("SPIKEPLACE_LOG");
    if (env == nullptr) return Level::Warn;
    if (std::strcmp(env, "debug") == 0) return Level::Debug;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    if (std::strcmp(env, "warn") == 0) return Level::Warn;
    if (std::strcmp(env, "error") == 0) return Level::Error;
    return Level::Warn;
}

std::atomic<int>& level_store() {
    static std::atomic<int> lv{static_cast<int>(parse_env())};
    return lv;
}

const char* tag(Level lv) {
    switch (lv) {
        case Level::Debug: return "debug";
        case Level::Info: return "info";
        case Level::Warn: return "warn";
        case Level::Error: return "error";
    }
    return "?";
}

}  // namespace

Level threshold() { return static_cast<Level>(level_store().load()); }

void set_threshold(Level lv) { level_store().store(static_cast<int>(lv)); }

void write(Level lv, const std::string& msg) {
    if (lv < threshold()) return;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::fprintf(stderr, "[spikeplace %s] %s\n", tag(lv), msg.c_str());
}

}  // namespace spikeplace::logging

#pragma once

#include <cstdio>

inline int g_failures = 0;

#define CHECK(cond)                                                     \
    do {                                                                \
        if (!(cond)) {                                                  \
            std::printf("FAIL %s:%d  %s\n", __FILE__, __LINE__, #cond); \
            ++g_failures;                                               \
        }                                                               \
    } while (0)

#define CHECK_MSG(cond, ...)                                            \
    do {                                                                \
        if (!(cond)) {                                                  \
            std::printf("FAIL %s:%d  %s  [", __FILE__, __LINE__, #cond); \
            std::printf(__VA_ARGS__);                                   \
            std::printf("]\n");                                         \
            ++g_failures;                                               \
        }                                                               \
    } while (0)

inline int test_summary(const char* name) {
    if (g_failures == 0) {
        std::printf("%s: ok\n", name);
        return 0;
    }
    std::printf("%s: %d failing checks\n", name, g_failures);
    return 1;
}

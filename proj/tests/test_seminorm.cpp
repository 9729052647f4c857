#include <doctest.h>

TEST_SUITE_BEGIN("seminorm");
TEST_SUITE_END();

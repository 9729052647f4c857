#include <doctest.h>

TEST_SUITE_BEGIN("constants");
TEST_SUITE_END();

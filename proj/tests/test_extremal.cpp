#include <doctest.h>

TEST_SUITE_BEGIN("extremal");
TEST_SUITE_END();

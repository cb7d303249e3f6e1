// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

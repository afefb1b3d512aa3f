/*
 * Copyright 2026 The qbent authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef QBENT_QBENT_HPP_
#define QBENT_QBENT_HPP_

#include "qbent/boolfun.hpp"
#include "qbent/constructions.hpp"
#include "qbent/gf2linalg.hpp"
#include "qbent/gf2n.hpp"
#include "qbent/gf2poly.hpp"
#include "qbent/io.hpp"
#include "qbent/linpoly.hpp"
#include "qbent/report.hpp"
#include "qbent/skewpoly.hpp"

#endif  // QBENT_QBENT_HPP_

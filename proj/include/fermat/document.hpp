/**
 * JSON documents for built complexes (format_version "1"):
 *
 *     {
 *       "format_version": "1",
 *       "degree": 2,
 *       "space": "affine",
 *       "cells": [[{"kind": "Vx", "roots": [0]}, ...],   // dimension 0
 *                 [{"kind": "Lx", "roots": [0, 1]}, ...], // dimension 1
 *                 [{"kind": "X", "roots": [0, 0, 1]}, ...]],
 *       "face1": [[d0, d1], ...],
 *       "face2": [[d0, d1, d2], ...]
 *     }
 *
 * Cells appear in the builder order; output is byte-stable.
 */
#pragma once

#include <filesystem>
#include <string>

#include "fermat/fermat_complex.hpp"

namespace fermat {

inline constexpr const char* kComplexFormatVersion = "1";

std::string complex_to_json(const FermatComplex& complex);
/// Throws ParseError naming the offending field.
FermatComplex complex_from_json(const std::string& text);

void export_complex(const FermatComplex& complex, const std::filesystem::path& path);
FermatComplex import_complex(const std::filesystem::path& path);

} // namespace fermat

from typing import Any, Dict, List

# документированные ключи с единицами измерения: раздел -> {ключ: основа}
UNIT_KEYS = {
    "radar": {"f0_hz": "f0", "bandwidth_hz": "bandwidth", "c_m_per_s": "c"},
    "aperture": {
        "r0_m": "r0",
        "theta_max_deg": "theta_max",
        "delta_y_m": "delta_y",
        "tx_offsets_m": "tx_offsets",
        "rx_offsets_m": "rx_offsets",
    },
    "scene": {"target_radius_m": "target_radius", "target_height_m": "target_height"},
    "point": {"x_m": "x", "y_m": "y", "z_m": "z"},
    "options": {"output_extent_m": "output_extent"},
}


def _check_section(location: str, section: Dict[str, Any], expected: Dict[str, str], errors: List[str]) -> List[str]:
    flagged = []
    for key in section:
        if key in expected:
            continue
        for good_key, stem in expected.items():
            if key.startswith(stem + "_") and good_key not in section:
                errors.append(
                    f"{location}.{key}: неверный суффикс единиц измерения, ожидается {location}.{good_key}"
                )
                flagged.append(key)
                flagged.append(good_key)
                break
    return flagged


def validate_unit_suffixes(raw: Dict[str, Any], errors: List[str]) -> List[str]:
    """
    Ищет ключи с верной основой, но другим суффиксом единиц (например r0_mm вместо r0_m).

    Returns:
        List[str]: ключи (и их ожидаемые пары), по которым ошибка уже записана
    """
    flagged = []
    if not isinstance(raw, dict):
        return flagged

    for section_name in ("radar", "aperture", "scene", "options"):
        section = raw.get(section_name)
        if isinstance(section, dict):
            flagged += _check_section(section_name, section, UNIT_KEYS[section_name], errors)

    scene = raw.get("scene")
    if isinstance(scene, dict) and isinstance(scene.get("points"), list):
        for i, point in enumerate(scene["points"]):
            if isinstance(point, dict):
                flagged += _check_section(f"scene.points[{i}]", point, UNIT_KEYS["point"], errors)

    return flagged

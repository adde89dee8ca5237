import os
from typing import List, Literal, Optional, get_args

from commons_lang.text import string_utils

ACTIVE_PROFILES_PROPERTY_NAME = "EJA_PROFILES_ACTIVE"

Profile = Literal["dev", "test", "prod"]

KNOWN_PROFILES = get_args(Profile)


def _split_profiles(value: Optional[str]) -> List[str]:
    if string_utils.is_blank(value):
        return []
    return [name.strip() for name in value.split(",") if string_utils.is_not_blank(name)]


class Environment(object):

    @staticmethod
    def get_active_profiles(default_profile: Optional[Profile] = "prod") -> List[str]:
        """
        Profiles named by EJA_PROFILES_ACTIVE (comma-delimited), or the default when it is blank.
        :raise RuntimeError: for unknown profile names, or when nothing is active
        """
        profiles = _split_profiles(os.getenv(ACTIVE_PROFILES_PROPERTY_NAME)) or _split_profiles(default_profile)
        if not profiles:
            raise RuntimeError("No active profiles found")
        unknown = [name for name in profiles if name not in KNOWN_PROFILES]
        if unknown:
            raise RuntimeError(f"Unknown profiles {unknown}, expected one of {list(KNOWN_PROFILES)}")
        return profiles

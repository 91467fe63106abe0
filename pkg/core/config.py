"""
Configuration management using python-dotenv for environment variables
"""
import os
from fractions import Fraction
from typing import Any, Dict
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(dotenv_path=env_path)


class ENVConfig:
    """Environment-specific configuration for on-disk state"""

    @property
    def cache_config(self) -> Dict[str, Any]:
        """Get series cache configuration"""
        default_dir = Path(__file__).parent.parent / '.cache'
        return {
            'cache_dir': Path(os.getenv('TORICSHIFT_CACHE_DIR', str(default_dir))),
            'enabled': os.getenv('TORICSHIFT_CACHE', 'true').lower() == 'true',
            'memory_slots': int(os.getenv('TORICSHIFT_CACHE_SLOTS', '32'))
        }


class AppConfig:
    """Application-level configuration settings"""

    @property
    def runtime_config(self) -> Dict[str, Any]:
        """Get runtime configuration"""
        default_log_dir = Path(__file__).parent.parent / 'logs'
        return {
            'debug': os.getenv('DEBUG', 'False').lower() == 'true',
            'log_dir': Path(os.getenv('TORICSHIFT_LOG_DIR', str(default_log_dir))),
            'default_cutoff': Fraction(os.getenv('TORICSHIFT_DEFAULT_CUTOFF', '4'))
        }


# Create singleton instances
env_config = ENVConfig()
app_config = AppConfig()

"""
Configuration module for the lambda_trees package.
"""

# imports
import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

# packages

# constants
DEFAULT_CONFIG_PATH = Path(__file__).parent.parent / "config.json"


# pylint: disable=too-many-instance-attributes
@dataclass
class LambdaTreesConfig:
    """
    Configuration class for the lambda_trees package.
    """

    # dataclass fields with default values
    # check runs
    default_seed: int = 0
    default_samples: int = 1000
    default_chain_depth: int = 20

    # sampling of group elements
    default_numerator_bound: int = 256
    default_triadic_numerator_bound: int = 729
    default_mean_exponent: int = 3
    default_parameter_pairs: int = 2

    # upper bound on chain elements scanned when filtering a witness chain
    max_chain_scan: int = 100000

    # logging
    log_path: str = "logs/lambda_trees.log"
    log_level: str = "INFO"

    @property
    def resolved_log_path(self) -> Path:
        """
        Get the log path, resolved against the repository root when relative.

        Returns:
            Path: The log file path.
        """
        path = Path(self.log_path)
        if path.is_absolute():
            return path
        return DEFAULT_CONFIG_PATH.parent / path

    @staticmethod
    def from_json(file_path: Path):
        """
        Load a LambdaTreesConfig object from a JSON file.

        Args:
            file_path (Path): Path to the JSON file.

        Returns:
            LambdaTreesConfig: A LambdaTreesConfig object, or the defaults when the file is missing.
        """
        if not file_path.exists():
            return LambdaTreesConfig()

        with file_path.open("rt", encoding="utf-8") as input_file:
            config_data = json.load(input_file)
            return LambdaTreesConfig(**config_data)

    def to_json(self, file_path: Optional[Path] = None) -> Optional[str]:
        """
        Save the LambdaTreesConfig object to a JSON file.

        Args:
            file_path (Path): Path to the JSON file.

        Returns:
            Optional[str]: A JSON string.
        """
        if file_path:
            with file_path.open("wt", encoding="utf-8") as output_file:
                json.dump(asdict(self), output_file, indent=4)
                return None
        else:
            return json.dumps(asdict(self), indent=4)


# load the default configuration
CONFIG = LambdaTreesConfig.from_json(DEFAULT_CONFIG_PATH)

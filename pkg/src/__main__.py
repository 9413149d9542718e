from src.cli import main
from src.log import setup_logger


if __name__ == "__main__":
    # Force logger initialization
    setup_logger()
    main()

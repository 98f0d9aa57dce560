import sys
from dotenv import load_dotenv
load_dotenv()

from cli import main
from utils.config import Config


def print_banner():
    config = Config.get_config_summary()

    print("=" * 60, file=sys.stderr)
    print("Quadratic Irrational Convergents", file=sys.stderr)
    print("=" * 60, file=sys.stderr)
    print(f"\n⚙️  Environment: {config['environment'].upper()}", file=sys.stderr)
    print(f"  • Hurwitz step cap: {config['max_steps']}", file=sys.stderr)
    print(f"  • Householder order cap: {config['max_householder_order']}", file=sys.stderr)
    print(f"  • Seed: {config['seed']}", file=sys.stderr)
    print(f"  • Identity trials: {config['identity_trials']}", file=sys.stderr)
    print(f"  • Bench workers: {config['bench_workers']}", file=sys.stderr)
    print(f"  • Timings: {'On' if config['record_timings'] else 'Off'}", file=sys.stderr)
    print("=" * 60, file=sys.stderr)
    print(file=sys.stderr)


if __name__ == "__main__":
    if Config.is_debug():
        print_banner()
    sys.exit(main(sys.argv[1:]))

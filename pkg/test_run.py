#!/usr/bin/env python3
"""
Test script to verify chordspec setup
"""

import os
from dotenv import load_dotenv

load_dotenv()
import sys
from pathlib import Path

def test_environment():
    """Test environment setup"""
    print("🧪 Testing chordspec setup...")
    print("=" * 50)

    # Check Python version
    print(f"Python version: {sys.version}")

    # Check required directories
    required_dirs = ['graphs', 'spectra', 'chorded', 'verifiers', 'utils', 'tests']
    for dir_name in required_dirs:
        if Path(dir_name).exists():
            print(f"✅ Directory '{dir_name}' exists")
        else:
            print(f"❌ Directory '{dir_name}' missing")

    # Environment overrides are all optional
    optional_env_vars = ['CHORDSPEC_CONFIG', 'CHORDSPEC_JOBS', 'CHORDSPEC_LOG_LEVEL', 'CHORDSPEC_LOG_DIR']

    print("\n🔑 Environment Variables:")
    for var in optional_env_vars:
        if os.getenv(var):
            print(f"✅ {var} = {os.getenv(var)}")
        else:
            print(f"⚠️  {var} is not set (optional)")

    # Test imports
    print("\n📦 Testing imports...")
    for module in ('numpy', 'pandas', 'openpyxl', 'tqdm'):
        try:
            __import__(module)
            print(f"✅ {module} imported")
        except ImportError:
            print(f"❌ {module} not found")

    try:
        from verifiers import TheoremVerifier, LemmaVerifier
        print("✅ Verifiers imported successfully")
    except ImportError as e:
        print(f"❌ Verifier import failed: {e}")
        return

    # Test configuration
    print("\n⚙️  Testing configuration...")
    try:
        from utils.config_utils import load_config
        config = load_config()
        print("✅ Configuration loaded")
        print(f"✅ Decision band: {config['numeric']['decision_band']}, "
              f"exact budget: n <= {config['exact']['max_order']}, jobs: {config['campaigns']['jobs']}")
    except Exception as e:
        print(f"❌ Configuration error: {e}")
        return

    # Tiny campaign
    print("\n🔎 Running a tiny campaign...")
    try:
        report = TheoremVerifier(config).verify(6)
        print(f"✅ theorem n=6: {report.classes_scanned} classes, exceptional {report.exceptional}, "
              f"verdict {report.verdict}")
        report = LemmaVerifier(config).verify_lemma3(5)
        print(f"✅ lemma3 k<=5: verdict {report.verdict}")
    except Exception as e:
        print(f"❌ Campaign failed: {e}")

    print("\n" + "=" * 50)
    print("🎉 Setup test complete!")
    print("\nNext steps:")
    print("1. Run the test suite: pytest -m 'not slow'")
    print("2. Run: python main.py verify all --jobs 4")
    print("3. Reports land in data/reports/")

if __name__ == "__main__":
    test_environment()

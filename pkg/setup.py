# ==================================================================================================
# Copyright 2026 The syncqkd Authors
# --------------------------------------------------------------------------------------------------
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this work except in compliance with the License.
# You may obtain a copy of the License in the LICENSE file, or at:
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==================================================================================================


import os
from setuptools import find_packages, setup


HERE = os.path.abspath(os.path.dirname(__file__))


def readme():
    with open(os.path.join(HERE, 'README.md')) as f:
        return f.read()


def get_version():
    with open(os.path.join(HERE, "syncqkd/__init__.py"), "r") as f:
        content = "".join(f.readlines())
    env = {}
    exec(content, env, env)
    return env["__version__"]


setup(name='syncqkd',
      version=get_version(),
      description='Simulation and verification toolkit for synchronous-correlation device-independent QKD',
      long_description=readme(),
      classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Physics',
        'Topic :: Security :: Cryptography',
      ],
      keywords='QKD Bell device-independent synchronous correlations',
      license='Apache',
      packages=find_packages(),
      test_suite="syncqkd.tests",
      scripts=['bin/qkd-ideal', 'bin/qkd-simulate', 'bin/qkd-eve', 'bin/qkd-rigidity'],
      install_requires=[
          'ansicolors',
          'numpy>=1.17',
          'psutil>=5.6.6',
          'scipy>=1.6',
          'six>=1.12.0',
          'tabulate',
          'twitter.common.app==0.3.11',
          'twitter.common.exceptions==0.3.11',
          'twitter.common.log==0.3.11',
      ],
      tests_require=[
          'mock',
          'pytest',
          'twitter.common.log',
      ],
      extras_require={
          'test': [
              'mock',
              'pytest',
              'twitter.common.log',
          ],
      },
      include_package_data=True,
      zip_safe=False
)

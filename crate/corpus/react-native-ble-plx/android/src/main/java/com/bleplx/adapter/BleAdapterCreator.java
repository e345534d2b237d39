package com.bleplx.adapter;

import android.content.Context;

public interface BleAdapterCreator {
  BleAdapter createAdapter(Context context);
}

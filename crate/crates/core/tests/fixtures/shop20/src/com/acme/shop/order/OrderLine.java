package com.acme.shop.order;

import com.acme.shop.catalog.Product;

public class OrderLine {
    private Product product;
    private Order order;

    public OrderLine(Product product, Order order) {
        this.product = product;
        this.order = order;
    }

    public int quantity() {
        return 5;
    }

    public Product product() {
        return product;
    }
}
